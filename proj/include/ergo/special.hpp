#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ergo/brute.hpp"
#include "ergo/expr.hpp"
#include "ergo/verdict.hpp"

// Criteria for the two fast special forms and for add-xor cascades.
//
//   f(x) = a + sum a_i (x ^ b_i):   measure preserving iff bijective mod 2,
//                                   ergodic iff transitive mod 4.
//   f(x) = a + sum a_i delta_i(x):  ergodic iff a odd, a_0 = 1 (mod 4) and
//                                   ord2(a_i) = i;  measure preserving iff
//                                   ord2(a_i) = i for all i.
//   f(x) = (..((x+c_0)^d_0)..+c_m)^d_m:  ergodic iff transitive mod 4.

namespace ergo {

inline ExprPtr build_xor_affine_expr(uint64_t a,
                                     const std::vector<std::pair<uint64_t, uint64_t>>& terms) {
  ExprPtr e = t_const(static_cast<int64_t>(a));
  for (const auto& [ai, bi] : terms)
    e = t_add(e, t_mul(t_const(static_cast<int64_t>(ai)),
                       t_xor(t_var("x"), t_const(static_cast<int64_t>(bi)))));
  return e;
}

inline ExprPtr build_digit_weighted_expr(uint64_t a, const std::vector<uint64_t>& weights) {
  ExprPtr e = t_const(static_cast<int64_t>(a));
  for (unsigned i = 0; i < weights.size(); ++i)
    e = t_add(e, t_mul(t_const(static_cast<int64_t>(weights[i])), t_digit(i, t_var("x"))));
  return e;
}

inline ExprPtr build_cascade_expr(const std::vector<uint64_t>& cs,
                                  const std::vector<uint64_t>& ds) {
  if (cs.size() != ds.size()) throw error("cascade: need equally many addends and xor masks");
  ExprPtr e = t_var("x");
  for (size_t i = 0; i < cs.size(); ++i) {
    e = t_add(e, t_const(static_cast<int64_t>(cs[i])));
    e = t_xor(e, t_const(static_cast<int64_t>(ds[i])));
  }
  return e;
}

struct SpecialVerdicts {
  Verdict mp;
  Verdict ergodic;
  ExprPtr expr;  // the lowered expression the verdicts speak about
};

inline SpecialVerdicts check_special_xor_affine(
    uint64_t a, const std::vector<std::pair<uint64_t, uint64_t>>& terms,
    uint64_t budget = 0) {
  SpecialVerdicts out;
  out.expr = build_xor_affine_expr(a, terms);
  out.mp = brute_bijective(out.expr, 1, 2, budget);
  out.mp.criterion = "xor_affine_mp";
  out.mp.rule = "bijectivity mod 2 decides measure preservation for a + sum a_i (x ^ b_i)";
  out.ergodic = brute_transitive(out.expr, 2, 2, budget);
  out.ergodic.criterion = "xor_affine_ergodic";
  out.ergodic.rule = "transitivity mod 4 decides ergodicity for a + sum a_i (x ^ b_i)";
  return out;
}

// Weights are read at precision n (a_0..a_{n-1}); congruences whose modulus
// exceeds 2^n are truncated, as in the interpolation criterion.
inline SpecialVerdicts check_special_digit_weighted(uint64_t a,
                                                    const std::vector<uint64_t>& weights,
                                                    unsigned n) {
  if (weights.size() > n) throw error("digit_weighted: more weights than working bits");
  const uint64_t m = mask_bits(n);
  SpecialVerdicts out;
  out.expr = build_digit_weighted_expr(a & m, weights);

  const char* rule_e = "a odd, a_0 = 1 (mod 4), ord2(a_i) = i decide ergodicity of a + sum a_i delta_i(x)";
  const char* rule_m = "ord2(a_i) = i for every i decides measure preservation of a + sum a_i delta_i(x)";
  out.ergodic = make_verdict("digit_weighted_ergodic", Property::Ergodic, Result::Holds,
                             Witness::none(), rule_e);
  out.mp = make_verdict("digit_weighted_mp", Property::MeasurePreserving, Result::Holds,
                        Witness::none(), rule_m);

  auto fail = [](Verdict& v, uint64_t idx, uint64_t got, std::string what) {
    if (v.result == Result::Holds) {
      v.result = Result::Fails;
      v.witness = Witness::congruence(idx, got, std::move(what));
    }
  };

  if (!(a & 1)) fail(out.ergodic, 0, a & 1, "a must be odd");
  for (unsigned i = 0; i < weights.size(); ++i) {
    uint64_t w = weights[i] & m;
    Valuation val = ord2(Word2{w, n});
    bool ord_ok = !val.infinite && val.ord == i;
    if (!ord_ok) {
      fail(out.mp, i, w, "ord2(a_" + std::to_string(i) + ") must be exactly " + std::to_string(i));
      if (i >= 1)
        fail(out.ergodic, i, w,
             "ord2(a_" + std::to_string(i) + ") must be exactly " + std::to_string(i));
    }
    if (i == 0) {
      uint64_t mod4 = n >= 2 ? 4 : 2;
      if ((w & (mod4 - 1)) != 1)
        fail(out.ergodic, 0, w & (mod4 - 1),
             "a_0 must be 1 mod " + std::to_string(mod4));
      if (n < 2) out.ergodic.note = "a_0 congruence truncated to the working modulus 2";
    }
  }
  return out;
}

inline SpecialVerdicts check_xor_add_cascade(const std::vector<uint64_t>& cs,
                                             const std::vector<uint64_t>& ds,
                                             uint64_t budget = 0) {
  SpecialVerdicts out;
  out.expr = build_cascade_expr(cs, ds);
  out.ergodic = brute_transitive(out.expr, 2, 2, budget);
  out.ergodic.criterion = "cascade_ergodic";
  out.ergodic.rule = "transitivity mod 4 decides ergodicity for add-xor cascades";
  out.mp = brute_bijective(out.expr, 1, 2, budget);
  out.mp.criterion = "cascade_mp";
  out.mp.rule = "bijectivity mod 2 decides measure preservation for add-xor cascades";
  return out;
}

}  // namespace ergo
