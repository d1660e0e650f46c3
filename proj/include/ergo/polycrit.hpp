#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ergo/brute.hpp"
#include "ergo/verdict.hpp"

// Criteria for polynomial state-transition functions: the six-bit
// descending-factorial-basis test, the small-modulus tests (transitive mod
// p^2 / p^3 decides ergodicity, bijective mod p^2 decides measure
// preservation), the rational-coefficient enumeration test, and the parity
// criterion for permutation polynomials mod 2^n.

namespace ergo {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct PolyVerdicts {
  Verdict mp;
  Verdict ergodic;
};

// --- descending factorial basis --------------------------------------------

// Stirling numbers of the second kind up to row d.
inline std::vector<std::vector<BigInt>> stirling2(unsigned d) {
  std::vector<std::vector<BigInt>> s(d + 1, std::vector<BigInt>(d + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= d; ++i)
    for (unsigned k = 1; k <= i; ++k) s[i][k] = s[i - 1][k - 1] + BigInt(k) * s[i - 1][k];
  return s;
}

// x^i = sum_k S(i,k) x-underline-k, so c_k = sum_i a_i S(i,k).
inline std::vector<BigInt> to_factorial_basis(const std::vector<int64_t>& monomial) {
  unsigned d = monomial.empty() ? 0 : static_cast<unsigned>(monomial.size() - 1);
  auto s = stirling2(d);
  std::vector<BigInt> c(monomial.size(), 0);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned k = 0; k <= i; ++k) c[k] += BigInt(monomial[i]) * s[i][k];
  return c;
}

inline uint64_t residue_mod(const BigInt& v, uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<uint64_t>();
}

// Only six bits decide: c_0=1(2), c_1=1(4), c_2=0(2), c_3=0(4) for
// ergodicity; c_1=1(2), c_2=0(2), c_3=0(2) for measure preservation.
inline PolyVerdicts check_poly_factorial(const std::vector<BigInt>& c) {
  auto coeff = [&](size_t i) -> BigInt { return i < c.size() ? c[i] : BigInt(0); };
  const char* rule = "six-bit congruences on descending-factorial coefficients";

  struct Cond { size_t i; uint64_t mod, want; };
  auto run = [&](std::initializer_list<Cond> conds, Property p, const char* name) {
    Verdict v = make_verdict(name, p, Result::Holds, Witness::none(), rule);
    for (const Cond& cn : conds) {
      uint64_t got = residue_mod(coeff(cn.i), cn.mod);
      if (got != cn.want) {
        v.result = Result::Fails;
        v.witness = Witness::congruence(cn.i, got,
                                        "c_" + std::to_string(cn.i) + " must be " +
                                            std::to_string(cn.want) + " mod " +
                                            std::to_string(cn.mod));
        break;
      }
    }
    return v;
  };

  PolyVerdicts out;
  out.ergodic = run({{0, 2, 1}, {1, 4, 1}, {2, 2, 0}, {3, 4, 0}}, Property::Ergodic,
                    "poly_factorial_ergodic");
  out.mp = run({{1, 2, 1}, {2, 2, 0}, {3, 2, 0}}, Property::MeasurePreserving,
               "poly_factorial_mp");
  return out;
}

inline PolyVerdicts check_poly_factorial(const std::vector<int64_t>& monomial) {
  return check_poly_factorial(to_factorial_basis(monomial));
}

// --- small-modulus tests ----------------------------------------------------

inline uint64_t poly_eval_mod(const std::vector<int64_t>& coeffs, uint64_t x, uint64_t q) {
  uint64_t r = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    int64_t c = coeffs[i] % static_cast<int64_t>(q);
    if (c < 0) c += static_cast<int64_t>(q);
    r = (r * x + static_cast<uint64_t>(c)) % q;
  }
  return r;
}

// Integer polynomial: ergodic iff transitive mod p^2 (p >= 5) or p^3
// (p in {2,3}); measure preserving iff bijective mod p^2.
inline PolyVerdicts check_poly_lowmod(const std::vector<int64_t>& coeffs, uint64_t p) {
  unsigned erg_exp = (p == 2 || p == 3) ? 3 : 2;
  uint64_t q_erg = 1, q_mp = p * p;
  for (unsigned i = 0; i < erg_exp; ++i) q_erg *= p;

  auto fn_erg = [&](uint64_t x) { return poly_eval_mod(coeffs, x, q_erg); };
  auto fn_mp = [&](uint64_t x) { return poly_eval_mod(coeffs, x, q_mp); };

  PolyVerdicts out;
  auto cyc = cycle_from_zero(fn_erg, q_erg);
  out.ergodic = make_verdict("poly_lowmod_ergodic", Property::Ergodic,
                             cyc.single_cycle ? Result::Holds : Result::Fails,
                             Witness::none(),
                             "integer polynomials: transitive mod " + std::to_string(q_erg) +
                                 " decides ergodicity");
  if (!cyc.single_cycle)
    out.ergodic.witness =
        Witness::from_text("walk from 0 returned after " + std::to_string(cyc.steps) +
                           " of " + std::to_string(q_erg) + " steps");

  auto inj = injective_on(fn_mp, q_mp);
  out.mp = make_verdict("poly_lowmod_mp", Property::MeasurePreserving,
                        inj.injective ? Result::Holds : Result::Fails, Witness::none(),
                        "integer polynomials: bijective mod " + std::to_string(q_mp) +
                            " decides measure preservation");
  if (!inj.injective) out.mp.witness = Witness::collision(inj.x1, inj.x2, inj.image);
  return out;
}

// --- rational coefficients --------------------------------------------------

// f in Q_p[x]: integer valued + compatible + ergodic (resp. measure
// preserving) iff the induced map mod p^L, L = floor(log_p deg) + 3, is
// compatible and transitive (resp. bijective).  The compatibility is
// verified pairwise on the enumerated domain rather than assumed.
struct QPolyVerdicts {
  Verdict mp;
  Verdict ergodic;
  bool integer_valued = true;
  bool compatible_on_domain = true;
};

inline QPolyVerdicts check_qpoly(const std::vector<BigRat>& coeffs, uint64_t p,
                                 uint64_t budget = 0) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;

  unsigned deg = coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1);
  unsigned L = 3;
  for (uint64_t d = deg; d >= p; d /= p) ++L;
  uint64_t q = checked_pow(p, L, budget ? budget : default_budget());

  QPolyVerdicts out;
  auto na = [&](const std::string& why) {
    out.integer_valued = false;
    out.ergodic = make_verdict("qpoly_ergodic", Property::Ergodic, Result::NotApplicable,
                               Witness::from_text(why),
                               "rational polynomial enumeration mod " + std::to_string(q));
    out.mp = out.ergodic;
    out.mp.criterion = "qpoly_mp";
    out.mp.property = Property::MeasurePreserving;
    return out;
  };

  // exact values on 0..q-1, reduced mod q when p-integral
  std::vector<uint64_t> vals(q);
  for (uint64_t x = 0; x < q; ++x) {
    BigRat y = 0;
    for (size_t i = coeffs.size(); i-- > 0;) y = y * x + coeffs[i];
    BigInt num = numerator(y), den = denominator(y);
    if (den % p == 0)
      return na("f(" + std::to_string(x) + ") = " + y.str() + " has " + std::to_string(p) +
                " in its denominator");
    uint64_t d = residue_mod(den, q);
    vals[x] = (residue_mod(num, q) * mod_inverse(d, q)) % q;
  }

  // pairwise Lipschitz check on the domain
  std::string lip_note;
  for (uint64_t r = 1; r < L && out.compatible_on_domain; ++r) {
    uint64_t pr = 1;
    for (uint64_t i = 0; i < r; ++i) pr *= p;
    for (uint64_t x = 0; x < q && out.compatible_on_domain; ++x)
      for (uint64_t y = x + pr; y < q; y += pr)
        if ((vals[x] + q - vals[y]) % pr != 0) {
          out.compatible_on_domain = false;
          lip_note = "not 1-Lipschitz on the domain: f(" + std::to_string(x) + ") and f(" +
                     std::to_string(y) + ") differ mod " + std::to_string(pr);
          break;
        }
  }

  auto fn = [&](uint64_t x) { return vals[x]; };
  auto cyc = cycle_from_zero(fn, q);
  auto inj = injective_on(fn, q);

  auto finish = [&](const char* name, Property prop, bool ok, Witness w) {
    Verdict v = make_verdict(name, prop,
                             (ok && out.compatible_on_domain) ? Result::Holds : Result::Fails,
                             std::move(w),
                             "rational polynomial enumeration mod " + std::to_string(q));
    if (!out.compatible_on_domain) {
      v.result = Result::Fails;
      v.witness = Witness::from_text(lip_note);
    }
    v.note = out.compatible_on_domain ? "1-Lipschitz verified pairwise on the enumerated domain"
                                      : lip_note;
    return v;
  };

  Witness cw;
  if (!cyc.single_cycle)
    cw = Witness::from_text("walk from 0 returned after " + std::to_string(cyc.steps) +
                            " of " + std::to_string(q) + " steps");
  out.ergodic = finish("qpoly_ergodic", Property::Ergodic, cyc.single_cycle, std::move(cw));
  Witness iw;
  if (!inj.injective) iw = Witness::collision(inj.x1, inj.x2, inj.image);
  out.mp = finish("qpoly_mp", Property::MeasurePreserving, inj.injective, std::move(iw));
  return out;
}

// --- parity criterion for permutation polynomials ---------------------------

// P(x) = a_0 + a_1 x + ... + a_d x^d permutes Z/2^n (n > 1) iff a_1 is odd,
// a_2+a_4+... is even and a_3+a_5+... is even.  The same conditions apply
// verbatim to the xor-combined form a_0 ^ a_1 x ^ ... ^ a_d x^d.
inline Verdict check_rivest(const std::vector<int64_t>& a, bool xor_combined = false) {
  auto coeff = [&](size_t i) -> int64_t { return i < a.size() ? a[i] : 0; };
  int64_t even_sum = 0, odd_sum = 0;
  for (size_t i = 2; i < a.size(); i += 2) even_sum += a[i];
  for (size_t i = 3; i < a.size(); i += 2) odd_sum += a[i];

  Verdict v = make_verdict(xor_combined ? "rivest_xor" : "rivest",
                           Property::MeasurePreserving, Result::Holds, Witness::none(),
                           "a_1 odd, a_2+a_4+... even, a_3+a_5+... even");
  if (!(coeff(1) & 1))
    v.witness = Witness::congruence(1, coeff(1) & 1, "a_1 must be odd");
  else if (even_sum & 1)
    v.witness = Witness::congruence(2, even_sum & 1, "a_2+a_4+... must be even");
  else if (odd_sum & 1)
    v.witness = Witness::congruence(3, odd_sum & 1, "a_3+a_5+... must be even");
  else
    return v;
  v.result = Result::Fails;
  return v;
}

// xor-combined polynomial evaluation, for validating the parity criterion
// against brute force.
inline uint64_t xor_poly_eval(const std::vector<int64_t>& coeffs, uint64_t x, unsigned n) {
  const uint64_t m = mask_bits(n);
  uint64_t r = 0, xp = 1;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    r ^= (static_cast<uint64_t>(coeffs[i]) * xp) & m;
    xp = (xp * x) & m;
  }
  return r & m;
}

}  // namespace ergo
