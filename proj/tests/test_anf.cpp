#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ergo/anf.hpp"
#include "support/random_expr.hpp"

using namespace ergo;

TEST_CASE("coordinate ANF of the increment") {
  // bit 0 of x+1 is chi_0 + 1, bit 1 is chi_1 + chi_0 (the carry)
  AnfPoly p0 = coordinate_anf(parse("x+1"), 0);
  CHECK(p0.monomials == std::vector<uint32_t>{0, 1});
  AnfPoly p1 = coordinate_anf(parse("x+1"), 1);
  CHECK(p1.monomials == std::vector<uint32_t>{1, 2});
}

TEST_CASE("the ANF reconstructs its truth table") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    ExprPtr e = ergo::testing::random_compatible(rng, 4);
    unsigned i = rng() % 7;
    AnfPoly p = coordinate_anf(e, i);
    for (uint32_t x = 0; x < (1u << (i + 1)); ++x)
      REQUIRE(anf_eval(p, x) == ((eval1(e, x, i + 1) >> i) & 1));
  }
}

TEST_CASE("triangular shape of compatible maps") {
  // every coordinate of a compatible f is chi_i + phi_i(chi_0..chi_{i-1})
  // when f preserves measure; x + 2x^2 does
  ExprPtr f = parse("x + 2*x^2");
  for (unsigned i = 0; i <= 10; ++i) {
    AnfPoly p = coordinate_anf(f, i);
    bool bare = false, elsewhere = false;
    for (uint32_t m : p.monomials) {
      if (m == (1u << i)) bare = true;
      else if (m & (1u << i)) elsewhere = true;
    }
    REQUIRE(bare);
    REQUIRE_FALSE(elsewhere);
  }
}

TEST_CASE("ANF ergodicity criterion") {
  // x + (x^2 | C): ergodic iff bits 0 and 2 of C are set
  for (uint64_t C = 0; C < 16; ++C) {
    ExprPtr f = parse("x + (x^2 | " + std::to_string(C) + ")");
    AnfVerdicts v = check_anf_ergodic(f, 10);
    bool expect = (C & 1) && (C & 4);
    CHECK(v.ergodic.holds() == expect);
    CHECK(v.mp.holds() == ((C & 1) != 0));
  }
  CHECK(check_anf_ergodic(parse("x + 1"), 10).ergodic.holds());
  CHECK(check_anf_ergodic(parse("x + (x^2 | 3)"), 10).mp.holds());
  CHECK_FALSE(check_anf_ergodic(parse("x + (x^2 | 3)"), 10).ergodic.holds());
}

TEST_CASE("cap and compatibility are enforced") {
  CHECK_THROWS_AS(coordinate_anf(parse("x"), 21), error);
  CHECK_THROWS_AS(coordinate_anf(parse("x >> 1"), 2), error);
}
