#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/expr.hpp"
#include "ergo/verdict.hpp"

// Boolean coordinate functions of a compatible map.  For a compatible f,
// bit i of f(x) is a Boolean function tau_i(chi_0..chi_i) of the low i+1
// input bits; its algebraic normal form is obtained from the truth table
// by the Moebius (zeta) transform over the subset lattice.
//
// Bijectivity/transitivity criterion for such triangular systems:
//   tau_i = chi_i + phi_i(chi_0..chi_{i-1})          (measure preserving)
//   additionally phi_0 = 1 and each phi_i, i > 0,
//   contains the monomial chi_0*...*chi_{i-1}        (ergodic)

namespace ergo {

struct AnfPoly {
  unsigned nvars = 0;               // variables chi_0 .. chi_{nvars-1}
  std::vector<uint32_t> monomials;  // sorted variable bitmasks; mask 0 is the constant 1
};

inline constexpr unsigned kAnfCap = 20;

inline AnfPoly coordinate_anf(const ExprPtr& f, unsigned i, unsigned cap = kAnfCap) {
  if (i > cap)
    throw error("coordinate_anf: index " + std::to_string(i) + " exceeds cap " +
                std::to_string(cap));
  auto cc = classify(f);
  if (!cc.compatible)
    throw error("coordinate_anf: expression is not compatible (contains " +
                pretty(cc.witness) + ")");

  const unsigned nvars = i + 1;
  const uint32_t size = 1u << nvars;
  std::vector<uint8_t> tt(size);
  for (uint32_t x = 0; x < size; ++x) tt[x] = (eval1(f, x, nvars) >> i) & 1u;

  // in-place Moebius transform (self-inverse over GF(2))
  for (unsigned b = 0; b < nvars; ++b) {
    const uint32_t bit = 1u << b;
    for (uint32_t x = 0; x < size; ++x)
      if (x & bit) tt[x] ^= tt[x ^ bit];
  }

  AnfPoly p;
  p.nvars = nvars;
  for (uint32_t m = 0; m < size; ++m)
    if (tt[m]) p.monomials.push_back(m);
  return p;
}

// Evaluate an ANF at an assignment (bit j of x = chi_j).
inline unsigned anf_eval(const AnfPoly& p, uint32_t x) {
  unsigned r = 0;
  for (uint32_t m : p.monomials) r ^= ((x & m) == m) ? 1u : 0u;
  return r;
}

struct AnfVerdicts {
  Verdict mp;
  Verdict ergodic;
};

inline AnfVerdicts check_anf_ergodic(const ExprPtr& f, unsigned imax, unsigned cap = kAnfCap) {
  const char* rule = "triangular Boolean system: tau_i = chi_i + phi_i, phi_0 = 1, phi_i of odd weight";
  AnfVerdicts out;
  out.mp = make_verdict("anf_mp", Property::MeasurePreserving, Result::Holds, Witness::none(), rule);
  out.ergodic = make_verdict("anf_ergodic", Property::Ergodic, Result::Holds, Witness::none(), rule);

  for (unsigned i = 0; i <= imax; ++i) {
    AnfPoly p = coordinate_anf(f, i, cap);
    const uint32_t chi_i = 1u << i;
    const uint32_t full = chi_i - 1;  // chi_0 * ... * chi_{i-1}

    bool has_bare_chi_i = false, chi_i_elsewhere = false, has_full = false;
    for (uint32_t m : p.monomials) {
      if (m == chi_i) has_bare_chi_i = true;
      else if (m & chi_i) chi_i_elsewhere = true;
      else if (m == full) has_full = true;  // for i = 0 this is the constant 1
    }

    if (!has_bare_chi_i || chi_i_elsewhere) {
      Witness w = Witness::congruence(
          i, 0, "bit " + std::to_string(i) + " is not of the form chi_" + std::to_string(i) +
                    " + phi(chi_0..chi_" + std::to_string(i ? i - 1 : 0) + ")");
      if (out.mp.result == Result::Holds) {
        out.mp.result = Result::Fails;
        out.mp.witness = w;
      }
      if (out.ergodic.result == Result::Holds) {
        out.ergodic.result = Result::Fails;
        out.ergodic.witness = w;
      }
      break;  // everything above i is moot once the triangular shape breaks
    }
    if (!has_full && out.ergodic.result == Result::Holds) {
      out.ergodic.result = Result::Fails;
      out.ergodic.witness = Witness::congruence(
          i, 0,
          i == 0 ? std::string("phi_0 must be the constant 1")
                 : "phi_" + std::to_string(i) + " lacks the monomial chi_0*...*chi_" +
                       std::to_string(i - 1) + " (even weight)");
    }
  }
  std::string note = "checked coordinates 0.." + std::to_string(imax);
  out.mp.note = note;
  out.ergodic.note = note;
  return out;
}

}  // namespace ergo
