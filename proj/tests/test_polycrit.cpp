#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ergo/polycrit.hpp"

using namespace ergo;

TEST_CASE("descending factorial basis conversion") {
  // x^2 = x-underline-2 + x-underline-1
  auto c = to_factorial_basis({0, 0, 1});
  CHECK(c[0] == 0);
  CHECK(c[1] == 1);
  CHECK(c[2] == 1);
  // 1 - x + 2x^2 = 1 + x + 2*x-underline-2
  auto c2 = to_factorial_basis({1, -1, 2});
  CHECK(c2[0] == 1);
  CHECK(c2[1] == 1);
  CHECK(c2[2] == 2);
}

TEST_CASE("six-bit factorial criterion") {
  CHECK(check_poly_factorial(std::vector<BigInt>{1, 1, 0, 0}).ergodic.holds());
  // 1 + x + 2x(x-1): c = (1,1,2,0), all congruences hold
  auto pv = check_poly_factorial(std::vector<int64_t>{1, -1, 2});
  CHECK(pv.ergodic.holds());
  CHECK(pv.mp.holds());
  CHECK(brute_transitive(parse("1 - x + 2*x^2"), 3).holds());

  CHECK_FALSE(check_poly_factorial(std::vector<BigInt>{0, 1, 0, 0}).ergodic.holds());
  CHECK(check_poly_factorial(std::vector<BigInt>{0, 1, 0, 0}).mp.holds());

  // only six bits decide: flipping anything above the stated moduli
  // never changes the verdict
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    std::vector<BigInt> base = {static_cast<int64_t>(rng() % 16), static_cast<int64_t>(rng() % 16),
                                static_cast<int64_t>(rng() % 16), static_cast<int64_t>(rng() % 16),
                                static_cast<int64_t>(rng() % 16)};
    auto before = check_poly_factorial(base);
    std::vector<BigInt> tweaked = base;
    tweaked[0] += 2 * static_cast<int64_t>(rng() % 8);
    tweaked[1] += 4 * static_cast<int64_t>(rng() % 8);
    tweaked[2] += 2 * static_cast<int64_t>(rng() % 8);
    tweaked[3] += 4 * static_cast<int64_t>(rng() % 8);
    tweaked[4] += static_cast<int64_t>(rng() % 64);
    auto after = check_poly_factorial(tweaked);
    REQUIRE(before.ergodic.holds() == after.ergodic.holds());
  }
}

TEST_CASE("small-modulus criterion") {
  CHECK(check_poly_lowmod({1, 1}, 5).ergodic.holds());
  auto rc6 = check_poly_lowmod({0, 1, 2}, 2);
  CHECK(rc6.mp.holds());
  CHECK_FALSE(rc6.ergodic.holds());  // 0 is a fixed point mod 8
}

TEST_CASE("a map transitive modulo powers of ten") {
  // 201 + 201x + 200x^17: ergodic for p = 2 and p = 5, hence transitive
  // mod 10^k by the Chinese remainder theorem; verified directly for k <= 4
  std::vector<int64_t> f(18, 0);
  f[0] = 201;
  f[1] = 201;
  f[17] = 200;
  CHECK(check_poly_lowmod(f, 2).ergodic.holds());
  CHECK(check_poly_lowmod(f, 5).ergodic.holds());
  uint64_t q = 1;
  for (int k = 1; k <= 4; ++k) {
    q *= 10;
    auto out = cycle_from_zero([&](uint64_t x) { return poly_eval_mod(f, x, q); }, q);
    REQUIRE(out.single_cycle);
  }
}

TEST_CASE("rational coefficient polynomials") {
  // 1 + x + 4*x(x-1)/2 = 1 - x + 2x^2
  std::vector<BigRat> f = {1, -1, 2};
  auto v = check_qpoly(f, 2);
  CHECK(v.ergodic.holds());
  CHECK(v.integer_valued);
  CHECK(v.compatible_on_domain);

  // x/2 is not integer valued
  std::vector<BigRat> half = {0, BigRat(1, 2)};
  auto nv = check_qpoly(half, 2);
  CHECK(nv.ergodic.result == Result::NotApplicable);
  CHECK_FALSE(nv.integer_valued);

  // x + 16x^2 behaves like the identity mod 16: measure preserving, not ergodic
  std::vector<BigRat> idish = {0, 1, 16};
  auto iv = check_qpoly(idish, 2);
  CHECK(iv.mp.holds());
  CHECK_FALSE(iv.ergodic.holds());

  // agreement with enumeration at the spec modulus
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    std::vector<int64_t> coeffs(3);
    for (auto& c : coeffs) c = static_cast<int64_t>(rng() % 16) - 8;
    std::vector<BigRat> rs(coeffs.begin(), coeffs.end());
    auto got = check_qpoly(rs, 2);
    REQUIRE(got.ergodic.holds() ==
            brute_transitive(parse(std::to_string(coeffs[0]) + " + " + std::to_string(coeffs[1]) +
                                   "*x + " + std::to_string(coeffs[2]) + "*x^2"),
                             4)
                .holds());
  }
}

TEST_CASE("parity criterion for permutation polynomials") {
  CHECK(check_rivest({0, 1, 2, 0}).holds());
  CHECK_FALSE(check_rivest({0, 1, 1, 0}).holds());
  CHECK(check_rivest({0, 1, 0, 0}).holds());

  // against enumeration mod 2^6, both the additive and the xor form
  std::mt19937_64 rng(77);
  for (int t = 0; t < 300; ++t) {
    std::vector<int64_t> a(4);
    for (auto& c : a) c = static_cast<int64_t>(rng() % 8);
    bool expect = check_rivest(a).holds();

    auto addf = [&](uint64_t x) { return poly_eval_mod(a, x, 64); };
    REQUIRE(injective_on(addf, 64).injective == expect);

    bool expect_xor = check_rivest(a, true).holds();
    auto xorf = [&](uint64_t x) { return xor_poly_eval(a, x, 6); };
    REQUIRE(injective_on(xorf, 64).injective == expect_xor);
  }
}
