#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ergo/word.hpp"

// Interpolation coefficients sigma_i(j) of the digit functions delta_i,
// computed two independent ways in exact integer arithmetic:
//
//   closed form:   sigma_i(0) = 0,  sigma_0(j) = (-1)^{j+1} 2^{j-1},
//                  sigma_i(j) = (-1)^{j+1} sum_{k>=1} (-1)^k C(j-1, k*2^i - 1)   (i >= 1)
//   differences:   sigma_i(j) = (Delta^j delta_i)(0)
//                             = sum_k (-1)^{j-k} C(j,k) delta_i(k)
//
// Their exact agreement, and the 2-adic valuation bounds
//   ||sigma_s(k)|| <= 2^{-floor(log2 k)+s-1}  for k not in {2^s, 2^{s+1}},
//   ||sigma_s(2^s)|| = 1,  ||sigma_s(2^{s+1})|| = 1/2,
//   ||sigma_s(2^m - 1)|| <= 2^{-m+s-1}        for m > s >= 1,
// are what the test suite pins down.

namespace ergo {

using SigmaInt = boost::multiprecision::cpp_int;

struct SigmaTable {
  unsigned imax = 0, jmax = 0;
  std::vector<std::vector<SigmaInt>> closed;  // [i][j], i <= imax, j <= jmax
  std::vector<std::vector<SigmaInt>> diff;
  bool agree = false;
};

namespace detail {

inline std::vector<std::vector<SigmaInt>> pascal(unsigned rows) {
  std::vector<std::vector<SigmaInt>> c(rows + 1);
  for (unsigned i = 0; i <= rows; ++i) {
    c[i].resize(i + 1);
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j)
      c[i][j] = (j == i) ? SigmaInt(1) : c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

}  // namespace detail

inline SigmaTable sigma_table(unsigned imax, unsigned jmax) {
  auto binom = detail::pascal(jmax);
  auto C = [&](unsigned n, uint64_t k) -> SigmaInt {
    if (k > n) return 0;
    return binom[n][static_cast<unsigned>(k)];
  };

  SigmaTable t;
  t.imax = imax;
  t.jmax = jmax;
  t.closed.assign(imax + 1, std::vector<SigmaInt>(jmax + 1, 0));
  t.diff = t.closed;

  for (unsigned j = 1; j <= jmax; ++j)
    t.closed[0][j] = (j % 2 == 0 ? SigmaInt(-1) : SigmaInt(1)) << (j - 1);
  for (unsigned i = 1; i <= imax; ++i)
    for (unsigned j = 1; j <= jmax; ++j) {
      SigmaInt s = 0;
      for (uint64_t k = 1; k * (1ull << i) <= j; ++k) {
        SigmaInt term = C(j - 1, k * (1ull << i) - 1);
        s += (k % 2 == 0) ? term : -term;
      }
      t.closed[i][j] = (j % 2 == 0) ? -s : s;
    }

  for (unsigned i = 0; i <= imax; ++i)
    for (unsigned j = 0; j <= jmax; ++j) {
      SigmaInt s = 0;
      for (unsigned k = 0; k <= j; ++k) {
        unsigned dig = (static_cast<uint64_t>(k) >> i) & 1u;
        if (!dig) continue;
        SigmaInt term = C(j, k);
        s += ((j - k) % 2 == 0) ? term : -term;
      }
      t.diff[i][j] = s;
    }

  t.agree = t.closed == t.diff;
  return t;
}

// 2-adic valuation of an exact integer; nullopt-like flag for zero.
struct SigmaValuation {
  bool infinite = false;
  unsigned ord = 0;
};

inline SigmaValuation sigma_ord2(const SigmaInt& v) {
  if (v == 0) return {true, 0};
  return {false, static_cast<unsigned>(boost::multiprecision::lsb(abs(v)))};
}

}  // namespace ergo
