#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include "ergo/expr.hpp"
#include "ergo/verdict.hpp"
#include "ergo/word.hpp"

// Exhaustive oracles: bijectivity, single-cycle transitivity and
// balancedness of induced maps on Z/p^n, by direct enumeration.  These are
// the ground truth the closed-form criteria are validated against.

namespace ergo {

inline uint64_t default_budget() {
  if (const char* s = std::getenv("PADIC_ERGO_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 0);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1ull << 24;
}

inline uint64_t checked_pow(uint64_t p, unsigned n, uint64_t budget) {
  uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (size > budget / p)
      throw error("enumeration budget exceeded: " + std::to_string(p) + "^" +
                  std::to_string(n) + " > " + std::to_string(budget));
    size *= p;
  }
  if (size > budget)
    throw error("enumeration budget exceeded: " + std::to_string(size) + " > " +
                std::to_string(budget));
  return size;
}

// --- generic engines over a callable x -> f(x) on [0, size) ----------------

struct InjectivityOutcome {
  bool injective = true;
  uint64_t x1 = 0, x2 = 0, image = 0;  // first collision when not injective
};

template <class F>
InjectivityOutcome injective_on(F&& f, uint64_t size) {
  std::vector<uint64_t> seen((size + 63) / 64, 0);
  for (uint64_t x = 0; x < size; ++x) {
    uint64_t y = f(x);
    if (seen[y >> 6] & (1ull << (y & 63))) {
      for (uint64_t x1 = 0; x1 < x; ++x1)
        if (f(x1) == y) return InjectivityOutcome{false, x1, x, y};
      return InjectivityOutcome{false, 0, x, y};  // unreachable
    }
    seen[y >> 6] |= 1ull << (y & 63);
  }
  return InjectivityOutcome{};
}

struct CycleOutcome {
  bool single_cycle = false;
  uint64_t steps = 0;            // first return to the start, or size+1 if none
  uint64_t stuck_at = 0;         // last state when the walk never returns
  std::vector<uint64_t> cycle;   // visited states, capped at cycle_record_cap
  static constexpr uint64_t cycle_record_cap = 1ull << 12;
};

// Walk from 0.  First return to 0 after exactly `size` steps means all
// states were visited once (a premature revisit of any state would shorten
// the period below the first return).
template <class F>
CycleOutcome cycle_from_zero(F&& f, uint64_t size) {
  CycleOutcome out;
  uint64_t x = 0;
  uint64_t cap = std::min<uint64_t>(size, CycleOutcome::cycle_record_cap);
  out.cycle.reserve(cap);
  for (uint64_t step = 0; step < size; ++step) {
    if (step < cap) out.cycle.push_back(x);
    x = f(x);
    if (x == 0) {
      out.steps = step + 1;
      out.single_cycle = (out.steps == size);
      return out;
    }
  }
  out.steps = size + 1;  // never returned: f is not even a permutation
  out.stuck_at = x;
  out.single_cycle = false;
  return out;
}

// --- expression-facing oracles ---------------------------------------------

inline std::function<uint64_t(uint64_t)> induced_map(const ExprPtr& f, unsigned n,
                                                     uint64_t p = 2,
                                                     const std::string& var = "x") {
  if (p == 2)
    return [f, n, var](uint64_t x) { return eval1(f, x, n, var); };
  uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= p;
  return [f, q, p, var](uint64_t x) { return eval_mod(f, x, q, p, var); };
}

inline Verdict brute_bijective(const ExprPtr& f, unsigned n, uint64_t p = 2,
                               uint64_t budget = 0) {
  uint64_t size = checked_pow(p, n, budget ? budget : default_budget());
  auto fn = induced_map(f, n, p);
  auto out = injective_on(fn, size);
  Verdict v = make_verdict("brute_bijective", Property::MeasurePreserving,
                           out.injective ? Result::Holds : Result::Fails,
                           Witness::none(),
                           "exhaustive injectivity of the induced map on " +
                               std::to_string(size) + " residues");
  if (!out.injective) v.witness = Witness::collision(out.x1, out.x2, out.image);
  return v;
}

inline Verdict brute_transitive(const ExprPtr& f, unsigned n, uint64_t p = 2,
                                uint64_t budget = 0) {
  uint64_t size = checked_pow(p, n, budget ? budget : default_budget());
  auto fn = induced_map(f, n, p);
  auto out = cycle_from_zero(fn, size);
  Verdict v = make_verdict("brute_transitive", Property::Ergodic,
                           out.single_cycle ? Result::Holds : Result::Fails,
                           Witness::none(),
                           "exhaustive single-cycle walk over " + std::to_string(size) +
                               " residues");
  v.witness.kind = Witness::Kind::Cycle;
  v.witness.cycle = out.cycle;
  v.witness.full_length = out.steps;
  if (!out.single_cycle) {
    if (out.steps > size)
      v.witness.text = "walk from 0 never returned (not a permutation), stuck at " +
                       std::to_string(out.stuck_at);
    else
      v.witness.text = "walk from 0 returned after " + std::to_string(out.steps) +
                       " of " + std::to_string(size) + " steps";
  }
  return v;
}

// Balancedness of a compatible F: (Z/2^n)^s -> (Z/2^n)^t: every output
// tuple must have exactly 2^(n(s-t)) preimages.
inline Verdict brute_balanced(const std::vector<ExprPtr>& outputs,
                              const std::vector<std::string>& vars, unsigned n,
                              uint64_t budget = 0) {
  const size_t s = vars.size(), t = outputs.size();
  if (t > s) throw error("brute_balanced: more outputs than inputs can never balance");
  if (n * s > 60) throw error("brute_balanced: domain too large");
  uint64_t total = checked_pow(2, static_cast<unsigned>(n * s), budget ? budget : default_budget());
  const uint64_t m = mask_bits(n);

  std::vector<uint64_t> counts;
  counts.assign(1ull << (n * t), 0);

  Env env;
  for (uint64_t packed = 0; packed < total; ++packed) {
    for (size_t i = 0; i < s; ++i) env[vars[i]] = word((packed >> (n * i)) & m, n);
    uint64_t key = 0;
    for (size_t j = 0; j < t; ++j) key |= eval(outputs[j], env, n).v << (n * j);
    ++counts[key];
  }

  const uint64_t expected = 1ull << (n * (s - t));
  for (uint64_t key = 0; key < counts.size(); ++key)
    if (counts[key] != expected) {
      Witness w;
      w.kind = Witness::Kind::Congruence;
      w.index = key;
      w.value = counts[key];
      w.text = "output tuple has " + std::to_string(counts[key]) + " preimages, expected " +
               std::to_string(expected);
      return make_verdict("brute_balanced", Property::Balanced, Result::Fails, w,
                          "exhaustive preimage count over " + std::to_string(total) +
                              " input tuples");
    }
  return make_verdict("brute_balanced", Property::Balanced, Result::Holds, Witness::none(),
                      "exhaustive preimage count over " + std::to_string(total) +
                          " input tuples");
}

}  // namespace ergo
