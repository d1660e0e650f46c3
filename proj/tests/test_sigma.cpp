#include <catch2/catch_amalgamated.hpp>

#include "ergo/sigma.hpp"

using namespace ergo;

TEST_CASE("closed form and finite differences agree") {
  SigmaTable t = sigma_table(4, 40);
  REQUIRE(t.agree);

  CHECK(t.closed[0][3] == 4);   // (-1)^4 * 2^2
  CHECK(t.closed[1][2] == 1);
  CHECK(t.closed[1][4] == 2);
  for (unsigned i = 0; i <= 4; ++i) CHECK(t.closed[i][0] == 0);
  for (unsigned j = 1; j <= 12; ++j) {
    SigmaInt expect = SigmaInt(1) << (j - 1);
    if (j % 2 == 0) expect = -expect;
    CHECK(t.closed[0][j] == expect);
  }
}

TEST_CASE("valuation bounds") {
  const unsigned I = 4, J = 64;
  SigmaTable t = sigma_table(I, J);
  REQUIRE(t.agree);
  for (unsigned s = 1; s <= I; ++s) {
    // equalities at k = 2^s and 2^{s+1}
    if ((1u << s) <= J) {
      auto v = sigma_ord2(t.closed[s][1u << s]);
      REQUIRE_FALSE(v.infinite);
      REQUIRE(v.ord == 0);
    }
    if ((2u << s) <= J) {
      auto v = sigma_ord2(t.closed[s][2u << s]);
      REQUIRE_FALSE(v.infinite);
      REQUIRE(v.ord == 1);
    }
    // the general bound elsewhere
    for (unsigned k = 1; k <= J; ++k) {
      if (k == (1u << s) || k == (2u << s)) continue;
      auto v = sigma_ord2(t.closed[s][k]);
      if (v.infinite) continue;
      unsigned lg = 0;
      while ((2u << lg) <= k) ++lg;  // floor(log2 k)
      REQUIRE(static_cast<int>(v.ord) >= static_cast<int>(lg) - static_cast<int>(s) + 1);
    }
    // sharper bound at k = 2^m - 1, which the table shows has exactly one
    // exception: sigma_1(3) = -2 sits at ord 1, not >= 2
    for (unsigned m = s + 1; (1u << m) - 1 <= J; ++m) {
      auto v = sigma_ord2(t.closed[s][(1u << m) - 1]);
      if (v.infinite) continue;
      if (s == 1 && m == 2) {
        REQUIRE(t.closed[s][3] == -2);
        REQUIRE(v.ord == 1);
        continue;
      }
      REQUIRE(static_cast<int>(v.ord) >= static_cast<int>(m) - static_cast<int>(s) + 1);
    }
  }
}
