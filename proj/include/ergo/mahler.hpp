#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/brute.hpp"
#include "ergo/expr.hpp"
#include "ergo/verdict.hpp"

// Interpolation-series criteria.  A compatible f: Z_2 -> Z_2 expands as
// f(x) = sum a_i * C(x,i) with a_i the iterated forward differences of f
// at 0.  Ergodicity and measure preservation are equivalent to simple
// 2-power congruences on the a_i:
//
//   measure preserving:  a_1 = 1 (mod 2),  a_i = 0 (mod 2^(floor(log2 i)+1)),  i >= 2
//   ergodic:             a_0 = 1 (mod 2),  a_1 = 1 (mod 4),
//                        a_i = 0 (mod 2^(floor(log2(i+1))+1)),  i >= 2
//
// At precision n only congruences with modulus <= 2^n are fully decidable;
// the rest are tested truncated to 2^n and reported.  With m = 2^n - 1
// coefficients the truncated set is exactly equivalent to transitivity
// (resp. bijectivity) of the induced map mod 2^n.

namespace ergo {

struct MahlerCoeffs {
  unsigned n = 1;               // precision the coefficients are known at
  std::vector<uint64_t> a;      // a[0..m], residues mod 2^n
};

inline unsigned floor_log2(uint64_t v) {
  unsigned r = 0;
  while (v >>= 1) ++r;
  return r;
}

inline MahlerCoeffs mahler_coeffs(const ExprPtr& f, unsigned n, uint64_t m,
                                  uint64_t budget = 0) {
  if (m >= (n >= 64 ? ~0ull : (1ull << n)))
    throw error("mahler_coeffs: index range must stay below 2^n");
  auto cc = classify(f);
  if (!cc.compatible)
    throw error("mahler_coeffs: expression is not compatible (contains " +
                pretty(cc.witness) + ")");
  uint64_t work = (m + 1) * (m + 2) / 2;
  uint64_t cap = budget ? budget : default_budget();
  if (work > cap)
    throw error("mahler_coeffs: difference table of " + std::to_string(work) +
                " entries exceeds budget " + std::to_string(cap));

  const uint64_t msk = mask_bits(n);
  MahlerCoeffs out;
  out.n = n;
  out.a.resize(m + 1);
  for (uint64_t x = 0; x <= m; ++x) out.a[x] = eval1(f, x & msk, n);
  // in-place forward differences: after pass i, a[i] = (Delta^i f)(0)
  for (uint64_t i = 1; i <= m; ++i)
    for (uint64_t j = m; j >= i; --j) out.a[j] = (out.a[j] - out.a[j - 1]) & msk;
  return out;
}

namespace detail {

struct CongSpec {
  uint64_t required_mod;  // full modulus demanded by the criterion
  uint64_t target;        // required residue (0 or 1)
};

inline CongSpec mahler_requirement(uint64_t i, bool ergodic) {
  if (ergodic) {
    if (i == 0) return {2, 1};
    if (i == 1) return {4, 1};
    return {1ull << (floor_log2(i + 1) + 1), 0};
  }
  if (i == 0) return {0, 0};  // unconstrained
  if (i == 1) return {2, 1};
  return {1ull << (floor_log2(i) + 1), 0};
}

inline Verdict check_mahler(const MahlerCoeffs& c, bool ergodic) {
  const uint64_t full = c.n >= 64 ? 0 : (1ull << c.n);  // 0 means 2^64
  uint64_t truncated = 0;
  Verdict v = make_verdict(ergodic ? "mahler_ergodic" : "mahler_mp",
                           ergodic ? Property::Ergodic : Property::MeasurePreserving,
                           Result::Holds, Witness::none(),
                           "interpolation coefficient congruences");
  for (uint64_t i = 0; i < c.a.size(); ++i) {
    CongSpec spec = mahler_requirement(i, ergodic);
    if (spec.required_mod == 0) continue;
    uint64_t mod = spec.required_mod;
    bool decidable = full == 0 || mod <= full;
    if (!decidable) {
      mod = full;
      ++truncated;
    }
    if ((c.a[i] & (mod - 1)) != (spec.target & (mod - 1))) {
      v.result = Result::Fails;
      v.witness = Witness::congruence(
          i, c.a[i] & (mod - 1),
          "a_" + std::to_string(i) + " must be " + std::to_string(spec.target) +
              " mod " + std::to_string(mod));
      break;
    }
  }
  if (truncated)
    v.note = std::to_string(truncated) +
             " congruence(s) truncated to the working modulus 2^" + std::to_string(c.n);
  return v;
}

}  // namespace detail

inline Verdict check_mahler_ergodic(const MahlerCoeffs& c) {
  return detail::check_mahler(c, true);
}

inline Verdict check_mahler_mp(const MahlerCoeffs& c) {
  return detail::check_mahler(c, false);
}

}  // namespace ergo
