#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ergo/brute.hpp"
#include "ergo/expr.hpp"
#include "ergo/verdict.hpp"

// Finite-precision differentiation: d is a derivative of f modulo 2^k at u
// (with step exponent K) when f(u + 2^K) = f(u) + d*2^K (mod 2^{k+K}).
// For uniformly differentiable f the relation holds for every u once K is
// large enough; the least such K (for modulus 2^k) is N_k(f), and
//
//   measure preserving  <=>  bijective mod 2^{N_1(f)+1}
//   ergodic             <=>  transitive mod 2^{N_2(f)+2}
//
// Finite sampling cannot prove uniform differentiability, so the N_k
// estimator below is heuristic and is flagged as such in its verdicts.

namespace ergo {

struct DerivativeEstimate {
  bool exists = false;   // difference was divisible by the step
  uint64_t d = 0;        // derivative candidate mod 2^k
  bool stable = false;   // same d at step exponents K and K+1
};

inline DerivativeEstimate numeric_derivative_mod2k(const ExprPtr& f, uint64_t u,
                                                   unsigned k, unsigned K) {
  if (k + K + 1 > 64) throw error("numeric_derivative_mod2k: precision exhausted");

  auto at_step = [&](unsigned step) -> std::optional<uint64_t> {
    unsigned n = k + step;  // congruence lives mod 2^{k+step}
    uint64_t m = mask_bits(n);
    uint64_t diff = (eval1(f, (u + (1ull << step)) & m, n) - eval1(f, u & m, n)) & m;
    if (diff & mask_bits(step)) return std::nullopt;  // not divisible by 2^step
    return (diff >> step) & mask_bits(k);
  };

  DerivativeEstimate out;
  auto d0 = at_step(K);
  if (!d0) return out;
  out.exists = true;
  out.d = *d0;
  auto d1 = at_step(K + 1);
  out.stable = d1 && *d1 == *d0;
  return out;
}

// Smallest K <= kmax such that the derivative mod 4 exists and is stable at
// steps 2^K and 2^{K+1} for every u < 2^{K+6}.  Heuristic: a finite sample
// cannot quantify over all u and h.
inline std::optional<unsigned> estimate_n2(const ExprPtr& f, unsigned kmax = 12) {
  for (unsigned K = 1; K <= kmax; ++K) {
    bool ok = true;
    for (uint64_t u = 0; u < (1ull << (K + 6)) && ok; ++u) {
      auto d = numeric_derivative_mod2k(f, u, 2, K);
      ok = d.exists && d.stable;
    }
    if (ok) return K;
  }
  return std::nullopt;
}

inline std::optional<unsigned> estimate_n1(const ExprPtr& f, unsigned kmax = 12) {
  for (unsigned K = 1; K <= kmax; ++K) {
    bool ok = true;
    for (uint64_t u = 0; u < (1ull << (K + 6)) && ok; ++u) {
      auto d = numeric_derivative_mod2k(f, u, 1, K);
      ok = d.exists && d.stable;
    }
    if (ok) return K;
  }
  return std::nullopt;
}

// Ergodic iff transitive mod 2^{N_2+2}.  Pass n2 = nullopt to request the
// heuristic estimate; the verdict is then marked heuristic.
inline Verdict check_ergodic_via_derivative(const ExprPtr& f,
                                            std::optional<unsigned> n2 = std::nullopt,
                                            uint64_t budget = 0) {
  bool estimated = !n2.has_value();
  if (estimated) {
    n2 = estimate_n2(f);
    if (!n2)
      return make_verdict("derivative_ergodic", Property::Ergodic, Result::NotApplicable,
                          Witness::from_text("no stable uniform derivative mod 4 found"),
                          "transitivity mod 2^{N_2+2} decides ergodicity for uniformly "
                          "differentiable maps");
  }
  Verdict v = brute_transitive(f, *n2 + 2, 2, budget);
  v.criterion = "derivative_ergodic";
  v.rule = "transitivity mod 2^{N_2+2} decides ergodicity for uniformly differentiable maps";
  v.heuristic = estimated;
  v.note = std::string("N_2 = ") + std::to_string(*n2) + (estimated ? " (estimated)" : " (supplied)");
  return v;
}

// Measure preserving iff bijective mod 2^{N_1+1}.
inline Verdict check_mp_via_derivative(const ExprPtr& f,
                                       std::optional<unsigned> n1 = std::nullopt,
                                       uint64_t budget = 0) {
  bool estimated = !n1.has_value();
  if (estimated) {
    n1 = estimate_n1(f);
    if (!n1)
      return make_verdict("derivative_mp", Property::MeasurePreserving, Result::NotApplicable,
                          Witness::from_text("no stable uniform derivative mod 2 found"),
                          "bijectivity mod 2^{N_1+1} decides measure preservation for "
                          "uniformly differentiable maps");
  }
  Verdict v = brute_bijective(f, *n1 + 1, 2, budget);
  v.criterion = "derivative_mp";
  v.rule = "bijectivity mod 2^{N_1+1} decides measure preservation for uniformly "
           "differentiable maps";
  v.heuristic = estimated;
  v.note = std::string("N_1 = ") + std::to_string(*n1) + (estimated ? " (estimated)" : " (supplied)");
  return v;
}

}  // namespace ergo
