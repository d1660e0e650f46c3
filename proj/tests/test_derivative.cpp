#include <catch2/catch_amalgamated.hpp>

#include "ergo/derivative.hpp"

using namespace ergo;

TEST_CASE("numeric derivatives of the operator table") {
  ExprPtr klsh = parse("x + (x^2 | 5)");
  for (uint64_t u = 0; u < 1024; ++u) {
    auto d = numeric_derivative_mod2k(klsh, u, 2, 3);
    REQUIRE(d.exists);
    REQUIRE(d.stable);
    REQUIRE(d.d == ((1 + 2 * u) & 3));
  }
  // xor with a nonnegative constant differentiates to 1
  for (uint64_t u = 0; u < 256; ++u) {
    auto d = numeric_derivative_mod2k(parse("x ^ 5"), u, 3, 4);
    REQUIRE((d.exists && d.stable));
    REQUIRE(d.d == 1);
  }
  // and with a nonnegative constant differentiates to 0
  for (uint64_t u = 0; u < 256; ++u) {
    auto d = numeric_derivative_mod2k(parse("x & 5"), u, 3, 4);
    REQUIRE((d.exists && d.stable));
    REQUIRE(d.d == 0);
  }
  CHECK_THROWS_AS(numeric_derivative_mod2k(parse("x"), 0, 40, 30), error);
}

TEST_CASE("measure-preserving maps have odd derivative") {
  const char* corpus[] = {"x + 2*x^2", "x + (x^2 | 1)", "x ^ (x^2 | 1)", "x + 1", "5*x + 3"};
  for (const char* s : corpus) {
    ExprPtr f = parse(s);
    REQUIRE(brute_bijective(f, 6).holds());
    for (uint64_t u = 0; u < 64; ++u) {
      auto d = numeric_derivative_mod2k(f, u, 1, 4);
      REQUIRE(d.exists);
      REQUIRE(d.d == 1);  // derivative is 1 mod 2
    }
  }
}

TEST_CASE("ergodicity through the uniform derivative") {
  ExprPtr klsh = parse("x + (x^2 | 5)");
  Verdict v = check_ergodic_via_derivative(klsh, 3);  // supplied threshold
  CHECK(v.holds());
  CHECK_FALSE(v.heuristic);
  CHECK(v.witness.full_length == 32);

  Verdict w = check_ergodic_via_derivative(parse("x + 1"), 1);
  CHECK(w.holds());

  // estimated threshold is flagged heuristic
  Verdict est = check_ergodic_via_derivative(klsh);
  CHECK(est.holds());
  CHECK(est.heuristic);

  auto n2 = estimate_n2(klsh);
  REQUIRE(n2.has_value());
  CHECK(*n2 <= 3);

  Verdict mp = check_mp_via_derivative(parse("x + 2*x^2"), 1);
  CHECK(mp.holds());
  CHECK(mp.witness.kind == Witness::Kind::None);
}
