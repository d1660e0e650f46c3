#include <catch2/catch_amalgamated.hpp>

#include "ergo/brute.hpp"

using namespace ergo;

TEST_CASE("bijectivity by enumeration") {
  // the RC6 map is a permutation: 0,3,2,1 mod 4
  ExprPtr rc6 = parse("x + 2*x^2");
  CHECK(brute_bijective(rc6, 2).holds());
  CHECK(eval1(rc6, 0, 2) == 0);
  CHECK(eval1(rc6, 1, 2) == 3);
  CHECK(eval1(rc6, 2, 2) == 2);
  CHECK(eval1(rc6, 3, 2) == 1);

  Verdict v = brute_bijective(parse("x + x^2"), 1);
  REQUIRE(v.fails());
  // the witness replays: both preimages give the same image
  CHECK(eval1(parse("x + x^2"), v.witness.a, 1) == v.witness.value);
  CHECK(eval1(parse("x + x^2"), v.witness.b, 1) == v.witness.value);

  CHECK(brute_bijective(parse("x"), 8).holds());
}

TEST_CASE("transitivity by enumeration") {
  Verdict v = brute_transitive(parse("-1 + x - 4*x^2"), 3);
  REQUIRE(v.holds());
  CHECK(v.witness.cycle == std::vector<uint64_t>{0, 7, 2, 1, 4, 3, 6, 5});

  CHECK(brute_transitive(parse("x + (x^2 | 5)"), 5).holds());
  CHECK(brute_transitive(parse("x + (x^2 | 5)"), 5).witness.full_length == 32);

  Verdict f = brute_transitive(parse("x + 2"), 2);
  REQUIRE(f.fails());
  CHECK(f.witness.full_length == 2);  // 0 -> 2 -> 0 closes early

  CHECK_FALSE(brute_transitive(parse("x"), 4).holds());
}

TEST_CASE("transitivity for odd p") {
  CHECK(brute_transitive(parse("x + 1"), 2, 5).holds());
  CHECK_FALSE(brute_transitive(parse("x + 5"), 2, 5).holds());
  CHECK_THROWS_AS(brute_transitive(parse("x & 1"), 2, 5), eval_error);
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(brute_transitive(parse("x + 1"), 30), error);
  CHECK_THROWS_AS(brute_transitive(parse("x + 1"), 10, 2, 512), error);
  CHECK(brute_transitive(parse("x + 1"), 9, 2, 512).holds());
}

TEST_CASE("balancedness") {
  // the bivariate pair (x ^ 2(x & y), (y + 3x^3) ^ x) is bijective
  std::vector<ExprPtr> F = {parse("x ^ (2*(x & y))"), parse("(y + 3*x^3) ^ x")};
  for (unsigned n = 1; n <= 4; ++n) CHECK(brute_balanced(F, {"x", "y"}, n).holds());

  // projection: every output has 2^n preimages
  CHECK(brute_balanced({parse("x")}, {"x", "y"}, 2).holds());

  Verdict v = brute_balanced({parse("x & y")}, {"x", "y"}, 1);
  REQUIRE(v.fails());
  CHECK(v.witness.index == 0);  // 0 has three preimages
  CHECK(v.witness.value == 3);

  CHECK_THROWS_AS(brute_balanced({parse("x"), parse("x")}, {"x"}, 2), error);
}
