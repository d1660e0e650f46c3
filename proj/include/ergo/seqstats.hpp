#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ergo/verdict.hpp"
#include "ergo/word.hpp"

// Exact distribution diagnostics for periodic bit sequences: cyclic
// k-tuple fullness (strict k-distribution), the finite-word randomness
// inequality |nu(b)/N - 2^-k| <= 1/sqrt(N) for k <= log2 N (tested in
// exact integer arithmetic), coordinate-sequence structure and the
// constructive realization of arbitrary half-periods.
//
// Conventions: tuple keys pack the first window bit into the low bit;
// k-fullness counts cyclic windows, the Q1 inequality counts the N-k+1
// linear windows of the word but keeps N in the denominator.

namespace ergo {

using HalfPeriodInt = boost::multiprecision::cpp_int;

struct BitCycle {
  std::vector<uint8_t> bits;  // treated cyclically; length > 0

  uint64_t length() const { return bits.size(); }
};

struct KFullReport {
  unsigned k = 0;
  uint64_t length = 0;
  std::vector<uint64_t> counts;  // indexed by packed tuple
  uint64_t expected = 0;         // length / 2^k when divisible
  bool full = false;
};

inline KFullReport k_fullness(const BitCycle& c, unsigned k) {
  const uint64_t L = c.length();
  if (L == 0) throw error("k_fullness: empty cycle");
  if (k > 0 && (k >= 64 || (1ull << k) > L))
    throw error("k_fullness: 2^k exceeds the cycle length");

  KFullReport r;
  r.k = k;
  r.length = L;
  r.counts.assign(1ull << k, 0);
  if (k == 0) {  // vacuously full
    r.counts[0] = L;
    r.expected = L;
    r.full = true;
    return r;
  }
  uint64_t key = 0;  // window bits, earliest in the low bit
  for (unsigned j = 0; j < k; ++j) key |= static_cast<uint64_t>(c.bits[j]) << j;
  for (uint64_t i = 0; i < L; ++i) {
    ++r.counts[key];
    key = (key >> 1) | (static_cast<uint64_t>(c.bits[(i + k) % L]) << (k - 1));
  }
  r.full = (L % (1ull << k)) == 0;
  r.expected = L >> k;
  for (uint64_t cnt : r.counts)
    if (cnt != r.expected) {
      r.full = false;
      break;
    }
  return r;
}

struct Q1PerK {
  unsigned k = 0;
  uint64_t worst_tuple = 0;
  uint64_t dev_num = 0;    // max over tuples of |nu * 2^k - N|
  uint64_t dev_den = 0;    // N * 2^k; deviation = dev_num / dev_den
  bool pass = false;       // dev_num^2 <= N * 4^k, exactly
};

struct Q1Report {
  uint64_t N = 0;
  std::vector<Q1PerK> per_k;  // k = 1 .. floor(log2 N)
  bool pass = true;
  bool has_violation = false;
  unsigned violation_k = 0;
  uint64_t violation_tuple = 0;
};

inline Q1Report q1_check(const std::vector<uint8_t>& word) {
  const uint64_t N = word.size();
  if (N < 2) throw error("q1_check: need at least 2 bits");
  Q1Report rep;
  rep.N = N;
  unsigned kmax = 0;
  while ((2ull << kmax) <= N) ++kmax;  // floor(log2 N)

  for (unsigned k = 1; k <= kmax; ++k) {
    std::vector<uint64_t> counts(1ull << k, 0);
    uint64_t key = 0;  // window bits, earliest in the low bit
    for (unsigned j = 0; j < k; ++j) key |= static_cast<uint64_t>(word[j]) << j;
    for (uint64_t i = 0; i + k <= N; ++i) {
      ++counts[key];
      if (i + k < N) key = (key >> 1) | (static_cast<uint64_t>(word[i + k]) << (k - 1));
    }
    Q1PerK pk;
    pk.k = k;
    pk.dev_den = N << k;
    pk.pass = true;
    const unsigned __int128 bound = static_cast<unsigned __int128>(N) << (2 * k);
    for (uint64_t b = 0; b < counts.size(); ++b) {
      uint64_t scaled = counts[b] << k;
      uint64_t num = scaled > N ? scaled - N : N - scaled;
      if (num > pk.dev_num) {
        pk.dev_num = num;
        pk.worst_tuple = b;
      }
      unsigned __int128 sq = static_cast<unsigned __int128>(num) * num;
      if (sq > bound) {
        pk.pass = false;
        if (!rep.has_violation) {
          rep.has_violation = true;
          rep.violation_k = k;
          rep.violation_tuple = b;
        }
      }
    }
    rep.pass = rep.pass && pk.pass;
    rep.per_k.push_back(pk);
  }
  return rep;
}

// Strict uniformity of a word sequence: every residue modulo 2^n occurs
// exactly once per period.
inline Verdict strict_uniform(const std::vector<uint64_t>& words, unsigned n,
                              uint64_t period = 0) {
  if (period == 0) period = 1ull << n;
  if (period != (1ull << n))
    throw error("strict_uniform: a period of " + std::to_string(period) +
                " cannot hold each of 2^" + std::to_string(n) + " residues exactly once");
  if (words.empty() || words.size() % period != 0)
    throw error("strict_uniform: supplied length is not a whole number of periods");

  const char* rule = "every residue occurs exactly once per period";
  std::vector<uint8_t> seen(period);
  for (size_t chunk = 0; chunk * period < words.size(); ++chunk) {
    std::fill(seen.begin(), seen.end(), 0);
    for (uint64_t i = 0; i < period; ++i) {
      uint64_t w = words[chunk * period + i];
      if (w >= period || seen[w]++) {
        Witness wit = Witness::congruence(chunk * period + i, w,
                                          w >= period ? "word out of range" : "repeated residue");
        return make_verdict("strict_uniform", Property::Balanced, Result::Fails, wit, rule);
      }
    }
  }
  return make_verdict("strict_uniform", Property::Balanced, Result::Holds, Witness::none(), rule);
}

// Full-period distribution check for an ergodic generator step function:
// the concatenated w-bit output stream over one period of 2^n states is a
// (w * 2^n)-cycle that must be w-full (every w-tuple occurring exactly
// 2^{n-w} * w ... i.e. length/2^w times), and its linear period must
// satisfy the Q1 inequality for every k <= log2(length).
struct DistrReport {
  unsigned n = 0, w = 0;
  BitCycle cycle;
  KFullReport fullness;          // at k = w
  std::vector<uint64_t> tuple_counts_at_w;
  Q1Report q1;
  bool derived_fullness_ok = true;  // (k-1)-fullness with doubled counts
  bool pass = false;
};

inline DistrReport distr_theorem_check(const std::function<uint64_t(uint64_t)>& f, unsigned n,
                                       unsigned out_width = 0, unsigned shift = 0,
                                       uint64_t seed = 0) {
  if (out_width == 0) out_width = n;
  DistrReport rep;
  rep.n = n;
  rep.w = out_width;
  const uint64_t period = 1ull << n;
  rep.cycle.bits.reserve(period * out_width);
  uint64_t x = seed & mask_bits(n);
  for (uint64_t i = 0; i < period; ++i) {
    x = f(x);
    uint64_t w = (x >> shift) & mask_bits(out_width);
    for (unsigned j = 0; j < out_width; ++j) rep.cycle.bits.push_back((w >> j) & 1);
  }
  rep.fullness = k_fullness(rep.cycle, out_width);
  rep.tuple_counts_at_w = rep.fullness.counts;
  rep.q1 = q1_check(rep.cycle.bits);

  // a k-full cycle is (k-1)-full with doubled counts
  if (out_width >= 1) {
    KFullReport down = k_fullness(rep.cycle, out_width - 1);
    for (uint64_t cnt : down.counts)
      if (cnt != 2 * rep.fullness.expected) {
        rep.derived_fullness_ok = false;
        break;
      }
  }
  rep.pass = rep.fullness.full && rep.q1.pass && rep.derived_fullness_ok;
  return rep;
}

// j-th coordinate sequence of the orbit: delta_j of the states, starting
// at the seed.  For an ergodic map its minimal period is exactly 2^{j+1}
// and the second half of the period is the bitwise negation of the first.
struct CoordinateReport {
  unsigned j = 0;
  std::vector<uint8_t> bits;      // one full period, 2^{j+1} bits
  uint64_t minimal_period = 0;
  bool half_negation = false;
  HalfPeriodInt gamma;            // first 2^j bits, packed little-endian
};

inline CoordinateReport coordinate_sequence(const std::function<uint64_t(uint64_t)>& f,
                                            unsigned j, uint64_t seed = 0) {
  CoordinateReport rep;
  rep.j = j;
  const uint64_t period = 2ull << j;
  rep.bits.resize(period);
  uint64_t x = seed;
  for (uint64_t i = 0; i < period; ++i) {
    rep.bits[i] = (x >> j) & 1;
    x = f(x);
  }
  // minimal period divides 2^{j+1}: check every proper power-of-two divisor
  rep.minimal_period = period;
  for (uint64_t d = 1; d < period; d <<= 1) {
    bool ok = true;
    for (uint64_t i = 0; i < period && ok; ++i) ok = rep.bits[i] == rep.bits[(i + d) % period];
    if (ok) {
      rep.minimal_period = d;
      break;
    }
  }
  rep.half_negation = true;
  const uint64_t half = period / 2;
  for (uint64_t i = 0; i < half; ++i)
    if (rep.bits[i + half] != (rep.bits[i] ^ 1)) {
      rep.half_negation = false;
      break;
    }
  for (uint64_t i = 0; i < half; ++i)
    if (rep.bits[i]) boost::multiprecision::bit_set(rep.gamma, static_cast<unsigned>(i));
  return rep;
}

// Constructive realization: given arbitrary gamma_j < 2^{2^j}, build the
// orbit z_0..z_{2^n-1} with
//   delta_0(z_i) = (gamma_0 + i) mod 2
//   delta_j(z_i) = (delta_{i mod 2^j}(gamma_j) + floor(i / 2^j)) mod 2,  j >= 1
// The z_i enumerate all residues mod 2^n, so z_i -> z_{i+1} induces a
// transitive map whose coordinate sequences recover the gamma_j exactly.
struct HalfPeriodRealization {
  unsigned n = 0;
  std::vector<uint64_t> orbit;    // z_0 .. z_{2^n - 1}
  bool single_cycle = false;      // orbit is a permutation of 0..2^n-1
  std::function<uint64_t(uint64_t)> induced;  // table-backed z_i -> z_{i+1}
};

inline HalfPeriodRealization realize_half_periods(const std::vector<HalfPeriodInt>& gammas,
                                                  unsigned n) {
  if (gammas.size() != n) throw error("realize_half_periods: need exactly n half-periods");
  for (unsigned j = 0; j < n; ++j) {
    if (gammas[j] < 0 || gammas[j] >> (1ull << j) != 0)
      throw error("realize_half_periods: gamma_" + std::to_string(j) + " out of range");
  }
  if (n > 30) throw error("realize_half_periods: orbit too large");

  HalfPeriodRealization r;
  r.n = n;
  const uint64_t size = 1ull << n;
  r.orbit.resize(size);
  for (uint64_t i = 0; i < size; ++i) {
    uint64_t z = (gammas[0].convert_to<uint64_t>() + i) & 1;
    for (unsigned j = 1; j < n; ++j) {
      unsigned g = boost::multiprecision::bit_test(gammas[j], static_cast<unsigned>(i & ((1ull << j) - 1))) ? 1 : 0;
      uint64_t bit = (g + (i >> j)) & 1;
      z |= bit << j;
    }
    r.orbit[i] = z;
  }

  std::vector<uint8_t> seen(size, 0);
  r.single_cycle = true;
  for (uint64_t z : r.orbit)
    if (seen[z]++) {
      r.single_cycle = false;
      break;
    }

  auto table = std::make_shared<std::vector<uint64_t>>(size);
  for (uint64_t i = 0; i < size; ++i) (*table)[r.orbit[i]] = r.orbit[(i + 1) & (size - 1)];
  r.induced = [table](uint64_t x) { return (*table)[x]; };
  return r;
}

}  // namespace ergo
