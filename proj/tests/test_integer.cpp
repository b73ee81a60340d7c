#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dtriple/integer.hpp"
#include "dtriple/rational.hpp"
#include "oracles.hpp"

using dtriple::Int;
using dtriple::Rat;

namespace {

Int random_bits(std::mt19937_64& rng, unsigned bits) {
  mpz_class v = 0;
  for (unsigned k = 0; k < bits; k += 64) {
    v <<= 64;
    v += mpz_class(std::to_string(rng()));
  }
  v >>= (bits % 64 == 0 ? 0 : 64 - bits % 64);
  return Int(v);
}

}  // namespace

TEST_CASE("isqrt examples") {
  CHECK(dtriple::isqrt(Int(0)) == Int(0));
  CHECK(dtriple::isqrt(Int(23104)) == Int(152));
  CHECK(dtriple::isqrt(Int(10)) == Int(3));
  CHECK_THROWS_AS(dtriple::isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt matches exhaustive floor-sqrt below 10^6") {
  // Walk s upward alongside n: s*s <= n < (s+1)^2.
  long s = 0;
  for (long n = 0; n < 1000000; ++n) {
    while ((s + 1) * (s + 1) <= n) ++s;
    REQUIRE(dtriple::isqrt(Int(n)) == Int(s));
  }
}

TEST_CASE("isqrt bracket holds on large random values") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Int n = random_bits(rng, 64 + static_cast<unsigned>(rng() % 2000));
    const Int s = dtriple::isqrt(n);
    REQUIRE(s * s <= n);
    REQUIRE(n < (s + Int(1)) * (s + Int(1)));
  }
}

TEST_CASE("as_square examples") {
  auto r = dtriple::as_square(Int(5322244) + Int(5));
  REQUIRE(r);
  CHECK(*r == Int(2307));
  r = dtriple::as_square(Int(721) + Int(8 * 120));
  REQUIRE(r);
  CHECK(*r == Int(41));
  CHECK_FALSE(dtriple::as_square(Int(2)));
  CHECK_FALSE(dtriple::as_square(Int(-4)));
  CHECK(*dtriple::as_square(Int(0)) == Int(0));
}

TEST_CASE("as_square recovers roots up to 1000 bits and rejects neighbours") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Int s = random_bits(rng, 1 + static_cast<unsigned>(rng() % 1000));
    const Int sq = s * s;
    auto r = dtriple::as_square(sq);
    REQUIRE(r);
    REQUIRE(*r == s);
    if (s > Int(1)) {
      REQUIRE_FALSE(dtriple::as_square(sq + Int(1)));
      REQUIRE_FALSE(dtriple::as_square(sq - Int(1)));
    }
  }
}

TEST_CASE("as_square agrees with brute force on small values") {
  for (long n = -50; n < 200000; ++n) {
    const bool lib = dtriple::as_square(Int(n)).has_value();
    const bool ref = oracle::square_root(n).has_value();
    REQUIRE(lib == ref);
  }
}

TEST_CASE("Int decimal parsing and rendering") {
  CHECK(Int::parse("1121445263038322515826332803").str() == "1121445263038322515826332803");
  CHECK(Int::parse("-480") == Int(-480));
  CHECK(Int::parse("\xE2\x88\x92" "480") == Int(-480));
  CHECK_THROWS_AS(Int::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Int::parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Int::parse("-"), std::invalid_argument);
}

TEST_CASE("floor division and exact division") {
  CHECK(dtriple::floor_div(Int(-7), Int(2)) == Int(-4));
  CHECK(dtriple::floor_mod(Int(-7), Int(2)) == Int(1));
  CHECK(dtriple::div_exact(Int(-12), Int(4)) == Int(-3));
  CHECK_THROWS_AS(dtriple::div_exact(Int(7), Int(2)), std::domain_error);
  CHECK_THROWS_AS(dtriple::floor_div(Int(7), Int(0)), std::domain_error);
}

TEST_CASE("Rat arithmetic is canonical") {
  CHECK(Rat(1, 2) + Rat(1, 2) == Rat(1));
  CHECK((Rat(1, 2) + Rat(1, 2)).str() == "1/1");
  CHECK(Rat(3, 4) * Rat(4, 3) == Rat(1));
  CHECK(Rat(Int(-462) * Int(-462)) / Rat(4) == Rat(53361));
  CHECK(Rat(6, -4).num() == Int(-3));
  CHECK(Rat(6, -4).den() == Int(2));
  CHECK(Rat(0, -5).den() == Int(1));
  CHECK(-Rat(1, 3) == Rat(-1, 3));
  CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
  CHECK(Rat::parse("10/-4").str() == "-5/2");
}

TEST_CASE("Rat equal values have identical representation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int k = 0; k < 2000; ++k) {
    long p = dist(rng), q = dist(rng), f = dist(rng);
    if (q == 0 || f == 0) continue;
    const Rat x{Int(p), Int(q)};
    const Rat y(Int(p * f), Int(q * f));
    REQUIRE(x.num() == y.num());
    REQUIRE(x.den() == y.den());
    REQUIRE(dtriple::gcd(x.num(), x.den()) == Int(1));
    REQUIRE(x.den().sign() > 0);
  }
}

TEST_CASE("rat_as_square") {
  CHECK(*dtriple::rat_as_square(Rat(9, 4)) == Rat(3, 2));
  CHECK_FALSE(dtriple::rat_as_square(Rat(2)));
  CHECK(*dtriple::rat_as_square(Rat(5322249)) == Rat(2307));
  CHECK_FALSE(dtriple::rat_as_square(Rat(-9, 4)));
  CHECK_FALSE(dtriple::rat_as_square(Rat(9, 8)));
}
