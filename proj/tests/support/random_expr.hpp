#pragma once

#include <random>
#include <vector>

#include "ergo/expr.hpp"

// Random expression trees for property sweeps.  Compatible trees use only
// the 1-Lipschitz operator set; inversion and exponentiation are wrapped
// so their arguments are odd / in (1+2u)^v form and evaluation is total.

namespace ergo::testing {

using Rng = std::mt19937_64;

inline ExprPtr random_compatible(Rng& rng, unsigned depth) {
  auto pick = [&](unsigned hi) { return std::uniform_int_distribution<unsigned>(0, hi)(rng); };
  if (depth == 0 || pick(5) == 0) {
    switch (pick(2)) {
      case 0: return t_var("x");
      case 1: return t_const(static_cast<int64_t>(rng()) % 17);
      default: return t_const(static_cast<int64_t>(pick(7)));
    }
  }
  switch (pick(9)) {
    case 0: return t_add(random_compatible(rng, depth - 1), random_compatible(rng, depth - 1));
    case 1: return t_sub(random_compatible(rng, depth - 1), random_compatible(rng, depth - 1));
    case 2: return t_mul(random_compatible(rng, depth - 1), random_compatible(rng, depth - 1));
    case 3: return t_and(random_compatible(rng, depth - 1), random_compatible(rng, depth - 1));
    case 4: return t_or(random_compatible(rng, depth - 1), random_compatible(rng, depth - 1));
    case 5: return t_xor(random_compatible(rng, depth - 1), random_compatible(rng, depth - 1));
    case 6: return t_not(random_compatible(rng, depth - 1));
    case 7: return t_shl(random_compatible(rng, depth - 1), pick(3));
    case 8:
      // inv(2e+1) is always legal
      return t_inv(t_add(t_mul(t_const(2), random_compatible(rng, depth - 1)), t_const(1)));
  }
  return t_var("x");
}

}  // namespace ergo::testing
