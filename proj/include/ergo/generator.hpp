#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ergo/brute.hpp"
#include "ergo/expr.hpp"
#include "ergo/special.hpp"
#include "ergo/verdict.hpp"

// Maximal-period generators.  A spec names a state transition family, the
// working precision n and an output map; build() lowers it to an
// expression, runs the family's ergodicity criterion, and refuses to
// construct when the criterion fails.  A built generator walks one cycle
// through all 2^n states and its output is strictly uniform per period.

namespace ergo {

struct OutputMap {
  enum class Kind { Full, TruncateTop, Custom };
  Kind kind = Kind::Full;
  unsigned k = 0;    // output width for TruncateTop / Custom
  ExprPtr custom;    // must be balanced onto k bits; verified at build
};

struct GeneratorSpec {
  enum class Kind {
    ExprIterate,   // iterate a user expression
    Exponential,   // f(x) = a*x + a^x, a odd
    Inversive,     // f(x) = -1/(2x+1) - x
    Delta,         // f(x) = c + x + 2*(g(x+1) - g(x)), g compatible, c odd
    XorAddCascade, // f(x) = (..((x+c_0)^d_0)..+c_m)^d_m
    DigitWeighted, // f(x) = a + sum a_i delta_i(x)
    XorAffine      // f(x) = a + sum a_i (x ^ b_i)
  };
  Kind kind = Kind::ExprIterate;
  unsigned n = 8;

  ExprPtr expr;  // ExprIterate
  uint64_t a = 3;    // Exponential / DigitWeighted / XorAffine constant term
  ExprPtr g;         // Delta
  uint64_t c = 1;    // Delta addend
  std::vector<uint64_t> cs, ds;                      // cascade constants
  std::vector<uint64_t> weights;                     // digit weights
  std::vector<std::pair<uint64_t, uint64_t>> terms;  // xor-affine (a_i, b_i)

  OutputMap output;
};

class build_error : public error {
public:
  build_error(const std::string& msg, Verdict v) : error(msg), verdict(std::move(v)) {}
  Verdict verdict;
};

// Look-up table t[j] = a^(2^j) mod 2^n, built with n-1 squarings; a^x is
// then at most n table multiplications selected by the bits of x.
struct ExpTable {
  unsigned n = 1;
  std::vector<uint64_t> t;

  uint64_t pow(uint64_t x) const {
    const uint64_t m = mask_bits(n);
    uint64_t r = 1;
    for (unsigned j = 0; j < n && (x >> j); ++j)
      if ((x >> j) & 1) r = (r * t[j]) & m;
    return r;
  }
};

inline ExpTable exp_generator_table(uint64_t a, unsigned n) {
  if (!(a & 1)) throw error("exp_generator_table: base must be odd");
  const uint64_t m = mask_bits(n);
  ExpTable tab;
  tab.n = n;
  tab.t.resize(n);
  tab.t[0] = a & m;
  for (unsigned j = 1; j < n; ++j) tab.t[j] = (tab.t[j - 1] * tab.t[j - 1]) & m;
  return tab;
}

struct Generator {
  GeneratorSpec spec;
  ExprPtr lowered;                        // single-expression form of the map
  std::function<uint64_t(uint64_t)> f;    // fast step function mod 2^n
  Verdict verdict;                        // criterion run at build time
  Verdict output_verdict;                 // balancedness of a custom output map
  unsigned out_width = 0;

  uint64_t output(uint64_t state) const {
    switch (spec.output.kind) {
      case OutputMap::Kind::Full: return state;
      case OutputMap::Kind::TruncateTop: return state >> (spec.n - spec.output.k);
      case OutputMap::Kind::Custom: return eval1(spec.output.custom, state, spec.n) & mask_bits(out_width);
    }
    return state;
  }
};

struct StreamState {
  uint64_t current = 0;
  uint64_t steps_taken = 0;
};

inline uint64_t step(const Generator& g, StreamState& s) {
  s.current = g.f(s.current);
  ++s.steps_taken;
  return s.current;
}

inline ExprPtr lower(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::ExprIterate:
      return spec.expr;
    case GeneratorSpec::Kind::Exponential: {
      int64_t a = static_cast<int64_t>(spec.a);
      return t_add(t_mul(t_const(a), t_var("x")), t_exp1p2(t_const((a - 1) / 2), t_var("x")));
    }
    case GeneratorSpec::Kind::Inversive:
      return t_sub(t_sub(t_const(0), t_inv(t_add(t_mul(t_const(2), t_var("x")), t_const(1)))),
                   t_var("x"));
    case GeneratorSpec::Kind::Delta: {
      ExprPtr shifted = substitute(spec.g, "x", t_add(t_var("x"), t_const(1)));
      return t_add(t_add(t_const(static_cast<int64_t>(spec.c)), t_var("x")),
                   t_mul(t_const(2), t_sub(shifted, spec.g)));
    }
    case GeneratorSpec::Kind::XorAddCascade:
      return build_cascade_expr(spec.cs, spec.ds);
    case GeneratorSpec::Kind::DigitWeighted:
      return build_digit_weighted_expr(spec.a, spec.weights);
    case GeneratorSpec::Kind::XorAffine:
      return build_xor_affine_expr(spec.a, spec.terms);
  }
  throw error("corrupt generator spec");
}

namespace detail {

// Cheapest sound criterion per family.  For a bare expression no finite
// check certifies all precisions, so we test transitivity exhaustively at
// min(n, 20) bits and say so in the note.
inline Verdict verify_spec(const GeneratorSpec& spec, const ExprPtr& lowered) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::Exponential: {
      if (!(spec.a & 1))
        return make_verdict("exponential_ergodic", Property::Ergodic, Result::Fails,
                            Witness::from_text("base must be odd"),
                            "a*x + a^x is ergodic for every odd a");
      Verdict v = brute_transitive(lowered, 3);
      v.criterion = "exponential_ergodic";
      v.rule = "transitivity mod 8 decides ergodicity within the factorial-series class";
      return v;
    }
    case GeneratorSpec::Kind::Inversive: {
      Verdict v = brute_transitive(lowered, 3);
      v.criterion = "inversive_ergodic";
      v.rule = "transitivity mod 8 decides ergodicity within the factorial-series class";
      return v;
    }
    case GeneratorSpec::Kind::Delta: {
      auto cc = classify(spec.g);
      if (!cc.compatible) {
        Verdict v = make_verdict("delta_ergodic", Property::Ergodic, Result::Fails,
                                 Witness::from_text("g is not compatible: contains " +
                                                    pretty(cc.witness)),
                                 "c + x + 2*(g(x+1) - g(x)) is ergodic for compatible g, odd c");
        return v;
      }
      if (!(spec.c & 1))
        return make_verdict("delta_ergodic", Property::Ergodic, Result::Fails,
                            Witness::from_text("c must be odd"),
                            "c + x + 2*(g(x+1) - g(x)) is ergodic for compatible g, odd c");
      return make_verdict("delta_ergodic", Property::Ergodic, Result::Holds, Witness::none(),
                          "c + x + 2*(g(x+1) - g(x)) is ergodic for compatible g, odd c");
    }
    case GeneratorSpec::Kind::XorAddCascade: {
      Verdict v = check_xor_add_cascade(spec.cs, spec.ds).ergodic;
      return v;
    }
    case GeneratorSpec::Kind::DigitWeighted: {
      std::vector<uint64_t> w = spec.weights;
      w.resize(spec.n, 0);  // unspecified high weights can never have the right order
      return check_special_digit_weighted(spec.a, w, spec.n).ergodic;
    }
    case GeneratorSpec::Kind::XorAffine:
      return check_special_xor_affine(spec.a, spec.terms).ergodic;
    case GeneratorSpec::Kind::ExprIterate: {
      auto cc = classify(spec.expr);
      if (!cc.compatible)
        return make_verdict("expr_ergodic", Property::Ergodic, Result::Fails,
                            Witness::from_text("expression is not compatible: contains " +
                                               pretty(cc.witness)),
                            "exhaustive transitivity of the induced map");
      unsigned nv = std::min(spec.n, 20u);
      Verdict v = brute_transitive(spec.expr, nv);
      v.criterion = "expr_ergodic";
      v.rule = "exhaustive transitivity of the induced map";
      if (nv < spec.n)
        v.note = "checked at " + std::to_string(nv) + " of " + std::to_string(spec.n) +
                 " bits; transitivity at full precision is certified only for the "
                 "structured families";
      return v;
    }
  }
  throw error("corrupt generator spec");
}

}  // namespace detail

inline Generator build(const GeneratorSpec& spec, bool force = false, uint64_t budget = 0) {
  if (spec.n < 1 || spec.n > 64) throw error("generator precision must be 1..64");
  Generator g;
  g.spec = spec;
  g.lowered = lower(spec);
  g.verdict = detail::verify_spec(spec, g.lowered);
  if (g.verdict.fails() && !force)
    throw build_error("generator refused: criterion '" + g.verdict.criterion + "' fails" +
                          (g.verdict.witness.text.empty() ? "" : " (" + g.verdict.witness.text + ")"),
                      g.verdict);

  const unsigned n = spec.n;
  const uint64_t m = mask_bits(n);
  switch (spec.kind) {
    case GeneratorSpec::Kind::Exponential: {
      ExpTable tab = exp_generator_table(spec.a & m, n);
      uint64_t a = spec.a & m;
      g.f = [a, m, tab](uint64_t x) { return (a * x + tab.pow(x)) & m; };
      break;
    }
    case GeneratorSpec::Kind::Inversive:
      g.f = [n, m](uint64_t x) {
        uint64_t inv = inv_odd(word((2 * x + 1) & m, n)).v;
        return (0 - inv - x) & m;
      };
      break;
    case GeneratorSpec::Kind::DigitWeighted: {
      std::vector<uint64_t> w = spec.weights;
      uint64_t a = spec.a & m;
      g.f = [a, m, w](uint64_t x) {
        uint64_t r = a;
        for (size_t i = 0; i < w.size(); ++i) r += ((x >> i) & 1) ? w[i] : 0;
        return r & m;
      };
      break;
    }
    case GeneratorSpec::Kind::XorAddCascade: {
      auto cs = spec.cs;
      auto ds = spec.ds;
      g.f = [cs, ds, m](uint64_t x) {
        for (size_t i = 0; i < cs.size(); ++i) x = ((x + cs[i]) ^ ds[i]) & m;
        return x;
      };
      break;
    }
    default: {
      ExprPtr e = g.lowered;
      g.f = [e, n](uint64_t x) { return eval1(e, x, n); };
      break;
    }
  }

  switch (spec.output.kind) {
    case OutputMap::Kind::Full:
      g.out_width = n;
      break;
    case OutputMap::Kind::TruncateTop:
      if (spec.output.k > n) throw error("output truncation wider than the state");
      g.out_width = spec.output.k;
      break;
    case OutputMap::Kind::Custom: {
      if (!spec.output.custom) throw error("custom output map missing");
      if (spec.output.k < 1 || spec.output.k > n)
        throw error("custom output width must be 1..n");
      g.out_width = spec.output.k;
      // every k-bit output value must have exactly 2^{n-k} preimages
      uint64_t total = checked_pow(2, n, budget ? budget : default_budget());
      std::vector<uint64_t> counts(1ull << spec.output.k, 0);
      for (uint64_t x = 0; x < total; ++x)
        ++counts[eval1(spec.output.custom, x, n) & mask_bits(spec.output.k)];
      g.output_verdict =
          make_verdict("brute_balanced", Property::Balanced, Result::Holds, Witness::none(),
                       "exhaustive fiber count of the output map onto " +
                           std::to_string(spec.output.k) + " bits");
      for (uint64_t y = 0; y < counts.size(); ++y)
        if (counts[y] != (1ull << (n - spec.output.k))) {
          g.output_verdict.result = Result::Fails;
          g.output_verdict.witness =
              Witness::congruence(y, counts[y], "output " + std::to_string(y) + " has " +
                                                    std::to_string(counts[y]) + " preimages");
          break;
        }
      if (!g.output_verdict.holds() && !force)
        throw build_error("custom output map is not balanced", g.output_verdict);
      break;
    }
  }
  return g;
}

// Concatenated bit stream: each step contributes the output word's bits
// delta_0 first; bytes carry the first bit in their least significant
// position.  The stream starts with the output of the first step past the
// seed.
inline std::vector<uint8_t> emit_bits(const Generator& g, StreamState& s, uint64_t nbits) {
  std::vector<uint8_t> bytes((nbits + 7) / 8, 0);
  uint64_t bit = 0;
  while (bit < nbits) {
    uint64_t w = g.output(step(g, s));
    for (unsigned j = 0; j < g.out_width && bit < nbits; ++j, ++bit)
      if ((w >> j) & 1) bytes[bit >> 3] |= 1u << (bit & 7);
  }
  return bytes;
}

inline std::vector<uint8_t> emit_bits(const Generator& g, uint64_t nbits, uint64_t seed = 0) {
  StreamState s{seed & mask_bits(g.spec.n), 0};
  return emit_bits(g, s, nbits);
}

// --- designed non-ergodicity witnesses --------------------------------------

// Discrete Bernoulli shift B_n: x -> ((x | 1) - 1) / 2 mod 2^n.  Every
// trajectory reaches 0 in at most n steps.
inline uint64_t bernoulli_step(uint64_t x, unsigned n) {
  return (((x | 1) - 1) >> 1) & mask_bits(n);
}

struct BernoulliReport {
  unsigned n = 0;
  uint64_t max_steps = 0;
  uint64_t argmax = 0;
  bool exhaustive = true;
  bool within_n = true;
};

inline BernoulliReport demo_bernoulli(unsigned n, uint64_t sample = 0, uint64_t seed = 1) {
  BernoulliReport r;
  r.n = n;
  auto probe = [&](uint64_t start) {
    uint64_t x = start & mask_bits(n), steps = 0;
    while (x != 0) {
      x = bernoulli_step(x, n);
      ++steps;
      if (steps > 4 * static_cast<uint64_t>(n) + 16) break;  // cannot happen; guards a hang
    }
    if (steps > r.max_steps) {
      r.max_steps = steps;
      r.argmax = start;
    }
  };
  if (sample == 0) {
    for (uint64_t x = 0; x < (1ull << n); ++x) probe(x);
  } else {
    r.exhaustive = false;
    uint64_t x = seed;
    for (uint64_t i = 0; i < sample; ++i) {
      x = x * 6364136223846793005ull + 1442695040888963407ull;  // LCG sampling
      probe(x & mask_bits(n));
    }
  }
  r.within_n = r.max_steps <= n;
  return r;
}

// Discrete tent map T_n: x -> (x & -2)/2 - x*(x & 1) mod 2^n.  Trajectories
// fall into short cycles; the exhaustive report carries the exact maximum
// cycle length and one witness cycle of that length.
inline uint64_t tent_step(uint64_t x, unsigned n) {
  const uint64_t m = mask_bits(n);
  return (((x & (m ^ 1)) >> 1) - x * (x & 1)) & m;
}

struct TentReport {
  unsigned n = 0;
  uint64_t max_cycle = 0;
  std::vector<uint64_t> witness_cycle;
  uint64_t cycle_count = 0;
};

inline TentReport demo_tent(unsigned n, uint64_t budget = 0) {
  uint64_t size = checked_pow(2, n, budget ? budget : default_budget());
  TentReport r;
  r.n = n;
  std::vector<uint8_t> state(size, 0);  // 0 unvisited, 1 done
  std::vector<uint64_t> path;
  for (uint64_t s = 0; s < size; ++s) {
    if (state[s]) continue;
    path.clear();
    uint64_t x = s;
    std::map<uint64_t, size_t> seen;
    while (!state[x] && !seen.count(x)) {
      seen[x] = path.size();
      path.push_back(x);
      x = tent_step(x, n);
    }
    if (!state[x]) {  // new cycle discovered
      uint64_t clen = path.size() - seen[x];
      ++r.cycle_count;
      if (clen > r.max_cycle) {
        r.max_cycle = clen;
        r.witness_cycle.assign(path.begin() + seen[x], path.end());
      }
    }
    for (uint64_t y : path) state[y] = 1;
  }
  return r;
}

}  // namespace ergo
