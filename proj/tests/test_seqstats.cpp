#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ergo/generator.hpp"
#include "ergo/seqstats.hpp"

using namespace ergo;

namespace {
BitCycle cycle_from_string(const char* s) {
  BitCycle c;
  for (const char* p = s; *p; ++p) c.bits.push_back(*p == '1');
  return c;
}
std::vector<uint8_t> bits_from_string(const char* s) { return cycle_from_string(s).bits; }
}  // namespace

TEST_CASE("cyclic tuple counting") {
  // the counterexample stream 0,2,3,1 over Z/4 gives the 8-cycle 00011110
  BitCycle c = cycle_from_string("00011110");
  KFullReport r = k_fullness(c, 2);
  CHECK_FALSE(r.full);
  CHECK(r.counts[0b00] == 3);
  CHECK(r.counts[0b01] == 1);  // tuple (1,0): first bit 1, then 0
  CHECK(r.counts[0b10] == 1);  // tuple (0,1)
  CHECK(r.counts[0b11] == 3);

  // a de Bruijn cycle is 3-full
  KFullReport db = k_fullness(cycle_from_string("00011101"), 3);
  CHECK(db.full);
  for (uint64_t cnt : db.counts) CHECK(cnt == 1);

  CHECK(k_fullness(cycle_from_string("01"), 0).full);
  CHECK(k_fullness(cycle_from_string("01"), 1).full);
  CHECK_THROWS_AS(k_fullness(cycle_from_string("01"), 3), error);

  // a k-full cycle is (k-1)-full with doubled counts
  KFullReport down = k_fullness(cycle_from_string("00011101"), 2);
  CHECK(down.full);
  for (uint64_t cnt : down.counts) CHECK(cnt == 2);
}

TEST_CASE("the finite-word randomness inequality") {
  Q1Report r = q1_check(bits_from_string("1111111100000111"));
  REQUIRE(r.per_k.size() == 4);
  CHECK(r.per_k[3].pass);                       // k = 4
  CHECK(r.per_k[3].dev_num * 4 == r.per_k[3].dev_den);  // exactly 1/4
  CHECK_FALSE(r.per_k[2].pass);                 // k = 3
  CHECK(r.per_k[2].dev_num == 40);              // 5/16 of N*2^k = 128
  CHECK(r.per_k[2].worst_tuple == 0b111);
  CHECK_FALSE(r.pass);
  CHECK(r.violation_k == 2);  // the word already misses the bound at k=2

  Q1Report zeros = q1_check(std::vector<uint8_t>(16, 0));
  CHECK_FALSE(zeros.per_k[0].pass);  // k=1: deviation 1/2 > 1/4
  CHECK_FALSE(zeros.pass);
}

TEST_CASE("strict uniformity") {
  CHECK(strict_uniform({0, 3, 2, 1}, 2).holds());
  CHECK(strict_uniform({0, 3, 2, 1, 0, 3, 2, 1}, 2).holds());
  CHECK_FALSE(strict_uniform({0, 1, 0, 1}, 2).holds());
  CHECK_THROWS_AS(strict_uniform({0, 1, 2}, 2), error);
  CHECK_THROWS_AS(strict_uniform({0, 1, 2, 3}, 2, 3), error);

  // the inversive cycle reduced mod 4 stays strictly uniform
  GeneratorSpec inv;
  inv.kind = GeneratorSpec::Kind::Inversive;
  inv.n = 3;
  Generator g = build(inv);
  std::vector<uint64_t> words;
  StreamState s;
  for (int i = 0; i < 8; ++i) words.push_back(step(g, s) & 3);
  CHECK(strict_uniform(words, 2).holds());
}

TEST_CASE("full-period distribution") {
  // the counter at n=2: cycle 10 01 11 00, every 2-tuple occurs twice
  Generator counter = build([] {
    GeneratorSpec sp;
    sp.kind = GeneratorSpec::Kind::ExprIterate;
    sp.expr = parse("x+1");
    sp.n = 2;
    return sp;
  }());
  DistrReport r = distr_theorem_check(counter.f, 2);
  CHECK(r.pass);
  CHECK(r.cycle.bits == bits_from_string("10011100"));
  for (uint64_t cnt : r.fullness.counts) CHECK(cnt == 2);

  // the landmark at n=8: every 8-tuple exactly 8 times, and the
  // inequality holds for every k up to 11
  Generator klsh = build([] {
    GeneratorSpec sp;
    sp.kind = GeneratorSpec::Kind::ExprIterate;
    sp.expr = parse("x + (x^2 | 5)");
    sp.n = 8;
    return sp;
  }());
  DistrReport r8 = distr_theorem_check(klsh.f, 8);
  CHECK(r8.pass);
  CHECK(r8.cycle.bits.size() == 2048);
  for (uint64_t cnt : r8.fullness.counts) CHECK(cnt == 8);
  CHECK(r8.q1.per_k.size() == 11);
  CHECK(r8.q1.pass);
  CHECK(r8.derived_fullness_ok);

  // truncated output: top 3 bits of an 8-bit state, 3-full with period 3*256
  DistrReport rt = distr_theorem_check(klsh.f, 8, 3, 5);
  CHECK(rt.cycle.bits.size() == 3 * 256);
  CHECK(rt.fullness.full);
  for (uint64_t cnt : rt.fullness.counts) CHECK(cnt == 3 * 256 / 8);

  // and the counterexample fails 2-fullness
  std::vector<uint8_t> bad = bits_from_string("00011110");
  BitCycle bc{bad};
  CHECK_FALSE(k_fullness(bc, 2).full);
}

TEST_CASE("coordinate sequences") {
  Generator counter = build([] {
    GeneratorSpec sp;
    sp.kind = GeneratorSpec::Kind::ExprIterate;
    sp.expr = parse("x+1");
    sp.n = 6;
    return sp;
  }());
  CoordinateReport r1 = coordinate_sequence(counter.f, 1);
  CHECK(r1.bits == std::vector<uint8_t>{0, 0, 1, 1});
  CHECK(r1.minimal_period == 4);
  CHECK(r1.half_negation);
  CHECK(r1.gamma == 0);

  Generator klsh = build([] {
    GeneratorSpec sp;
    sp.kind = GeneratorSpec::Kind::ExprIterate;
    sp.expr = parse("x + (x^2 | 5)");
    sp.n = 10;
    return sp;
  }());
  for (unsigned j = 0; j < 8; ++j) {
    CoordinateReport r = coordinate_sequence(klsh.f, j);
    REQUIRE(r.minimal_period == (2ull << j));
    REQUIRE(r.half_negation);
  }
}

TEST_CASE("any half-period family is realizable") {
  // n=1, gamma_0 = 1: the orbit is 1, 0
  auto r1 = realize_half_periods({HalfPeriodInt(1)}, 1);
  CHECK(r1.single_cycle);
  CHECK(r1.orbit == std::vector<uint64_t>{1, 0});

  // n=3 with gamma = (1, 10b, 1011b)
  auto r3 = realize_half_periods({HalfPeriodInt(1), HalfPeriodInt(0b10), HalfPeriodInt(0b1011)}, 3);
  REQUIRE(r3.single_cycle);
  for (unsigned j = 0; j < 3; ++j) {
    CoordinateReport c = coordinate_sequence(r3.induced, j, r3.orbit[0]);
    REQUIRE(c.minimal_period == (2ull << j));
    REQUIRE(c.half_negation);
    REQUIRE(c.gamma == (j == 0 ? 1 : (j == 1 ? 0b10 : 0b1011)));
  }

  // the all-zero family still yields a transitive map
  auto rz = realize_half_periods(std::vector<HalfPeriodInt>(4, HalfPeriodInt(0)), 4);
  CHECK(rz.single_cycle);

  // random families round-trip exactly
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    unsigned n = 1 + rng() % 6;
    std::vector<HalfPeriodInt> gammas;
    for (unsigned j = 0; j < n; ++j) {
      HalfPeriodInt g = 0;
      for (uint64_t b = 0; b < (1ull << j); ++b)
        if (rng() & 1) boost::multiprecision::bit_set(g, static_cast<unsigned>(b));
      gammas.push_back(g);
    }
    auto r = realize_half_periods(gammas, n);
    REQUIRE(r.single_cycle);
    for (unsigned j = 0; j < n; ++j)
      REQUIRE(coordinate_sequence(r.induced, j, r.orbit[0]).gamma == gammas[j]);
  }

  CHECK_THROWS_AS(realize_half_periods({HalfPeriodInt(2)}, 1), error);  // gamma_0 too wide
  CHECK_THROWS_AS(realize_half_periods({HalfPeriodInt(1)}, 2), error);  // wrong count
}
