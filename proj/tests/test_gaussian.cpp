#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dtriple/gaussian.hpp"
#include "oracles.hpp"

using dtriple::GInt;
using dtriple::GRat;
using dtriple::Int;
using dtriple::Rat;

namespace {

GInt g(long re, long im) { return GInt(Int(re), Int(im)); }

Int random_component(std::mt19937_64& rng, unsigned bits) {
  mpz_class v = 0;
  for (unsigned k = 0; k < bits; k += 64) {
    v <<= 64;
    v += mpz_class(std::to_string(rng()));
  }
  v >>= (bits % 64 == 0 ? 0 : 64 - bits % 64);
  if (rng() & 1) v = -v;
  return Int(v);
}

bool canonical(const GInt& w) { return w.re.sign() > 0 || (w.re.is_zero() && w.im.sign() >= 0); }

}  // namespace

TEST_CASE("Gaussian ring arithmetic") {
  CHECK(g(8, -4) * g(2, -2) == g(8, -24));
  CHECK(g(1, -1) * g(1, -1) == g(0, -2));
  CHECK(dtriple::conj(g(3, 4)) == g(3, -4));
  CHECK(g(1, 2) - g(3, -4) == g(-2, 6));
  CHECK(-g(1, -2) == g(-1, 2));
}

TEST_CASE("norm") {
  CHECK(dtriple::norm(GInt(-1)) == Int(1));
  CHECK(dtriple::norm(g(1, 1)) == Int(2));
  CHECK(dtriple::norm(g(8, -4) * g(2, -2)) == Int(640));
  CHECK(dtriple::norm(g(8, -4)) * dtriple::norm(g(2, -2)) == Int(640));
  CHECK(dtriple::norm(g(8, -24)) == Int(64 + 576));
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const GInt w(random_component(rng, 200), random_component(rng, 200));
    const GInt z(random_component(rng, 150), random_component(rng, 150));
    REQUIRE(dtriple::norm(w * z) == dtriple::norm(w) * dtriple::norm(z));
  }
}

TEST_CASE("divides") {
  CHECK(dtriple::divides(GInt(2), g(4, -2)));
  CHECK_FALSE(dtriple::divides(GInt(2), GInt(3)));
  const GInt s = g(8, -4) + g(2, -2) + g(-40, 180);
  CHECK(s == g(-30, 174));
  CHECK(dtriple::divides(GInt(2), s));
  CHECK_THROWS_AS(dtriple::divides(GInt(0), GInt(3)), std::invalid_argument);
  CHECK(dtriple::div_exact(g(8, -24), g(2, -2)) == g(8, -4));
  CHECK_THROWS_AS(dtriple::div_exact(GInt(3), GInt(2)), std::domain_error);
}

TEST_CASE("divides agrees with quotient search on small inputs") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> small(-6, 6);
  std::uniform_int_distribution<long> big(-40, 40);
  for (int k = 0; k < 3000; ++k) {
    const long dr = small(rng), di = small(rng);
    if (dr == 0 && di == 0) continue;
    // Bias toward actual multiples so both outcomes are exercised.
    long zr = big(rng), zi = big(rng);
    if (k % 2 == 0) {
      const long qr = small(rng), qi = small(rng);
      zr = dr * qr - di * qi;
      zi = dr * qi + di * qr;
    }
    // |q| <= |z| / |d| <= |zr| + |zi|.
    const long limit = std::abs(zr) + std::abs(zi) + 1;
    REQUIRE(dtriple::divides(g(dr, di), g(zr, zi)) == oracle::gaussian_divides_search(dr, di, zr, zi, limit));
  }
}

TEST_CASE("gint_as_square examples") {
  CHECK(*dtriple::gint_as_square(g(7, -24)) == g(4, -3));
  CHECK(*dtriple::gint_as_square(GInt(-2401)) == g(0, 49));
  CHECK(*dtriple::gint_as_square(g(0, -2)) == g(1, -1));
  CHECK(*dtriple::gint_as_square(GInt(0)) == GInt(0));
  CHECK_FALSE(dtriple::gint_as_square(GInt(2)));
  CHECK_FALSE(dtriple::gint_as_square(g(0, 1)));
  CHECK(*dtriple::gint_as_square(g(3, 4)) == g(2, 1));
  CHECK_FALSE(dtriple::gint_as_square(g(4, 3)));  // norm 25, but (5 + 4) / 2 is not an integer
}

TEST_CASE("gint_as_square agrees with exhaustive root search") {
  for (long re = -60; re <= 60; ++re) {
    for (long im = -60; im <= 60; ++im) {
      auto lib = dtriple::gint_as_square(g(re, im));
      auto ref = oracle::gaussian_root_search(re, im, 12);
      REQUIRE(lib.has_value() == ref.has_value());
      if (lib) {
        REQUIRE(canonical(*lib));
        REQUIRE(*lib * *lib == g(re, im));
      }
    }
  }
}

TEST_CASE("gint_as_square round-trips 10^4 random squares") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 10000; ++k) {
    const GInt w(random_component(rng, 127), random_component(rng, 127));
    const GInt sq = w * w;
    auto r = dtriple::gint_as_square(sq);
    REQUIRE(r);
    REQUIRE(*r * *r == sq);
    REQUIRE(canonical(*r));
    REQUIRE((*r == w || *r == -w));
  }
}

TEST_CASE("Gaussian literals") {
  CHECK(GInt::parse("8-4i") == g(8, -4));
  CHECK(GInt::parse("-4i+8") == g(8, -4));
  CHECK(GInt::parse("180i-40") == g(-40, 180));
  CHECK(GInt::parse("i") == g(0, 1));
  CHECK(GInt::parse("-i") == g(0, -1));
  CHECK(GInt::parse("\xE2\x88\x92" "2i") == g(0, -2));
  CHECK(GInt::parse("5") == GInt(5));
  CHECK_THROWS_AS(GInt::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GInt::parse("2j"), std::invalid_argument);
  CHECK_THROWS_AS(GInt::parse("--1"), std::invalid_argument);
  CHECK_THROWS_AS(GInt::parse("3i4"), std::invalid_argument);

  CHECK(g(392, -1194).str() == "392-1194i");
  CHECK(g(0, 49).str() == "49i");
  CHECK(g(1, -1).str() == "1-i");
  CHECK(g(0, -1).str() == "-i");
  CHECK(GInt(-480).str() == "-480");
  for (long re : {-3L, 0L, 5L}) {
    for (long im : {-7L, -1L, 0L, 1L, 12L}) REQUIRE(GInt::parse(g(re, im).str()) == g(re, im));
  }
}

TEST_CASE("Gaussian rationals") {
  const GRat q(Rat(7, 4), Rat(-6));
  CHECK(*dtriple::grat_as_square(q) == GRat(Rat(2), Rat(-3, 2)));
  CHECK(*dtriple::grat_as_square(GRat(0)) == GRat(0));
  CHECK(*dtriple::grat_as_square(GRat(-2401)) == GRat(g(0, 49)));
  CHECK_FALSE(dtriple::grat_as_square(GRat(Rat(1, 2))));
  CHECK(*dtriple::grat_as_square(GRat(Rat(-1, 9))) == GRat(Rat(0), Rat(1, 3)));

  const GRat a(Rat(1, 3), Rat(-2, 5));
  const GRat b(Rat(-7, 2), Rat(3));
  CHECK((a * b) / b == a);
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / GRat(0), std::domain_error);
  CHECK(GRat(g(3, 4)).as_gint() == g(3, 4));
  CHECK_FALSE(a.as_gint());
  CHECK(GRat(Rat(7, 4), Rat(-6)).str() == "7/4-6i");
}

TEST_CASE("grat_as_square round-trips random Gaussian rationals") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-5000, 5000);
  for (int k = 0; k < 3000; ++k) {
    long d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0 || d2 == 0) continue;
    const GRat w(Rat(Int(dist(rng)), Int(d1)), Rat(Int(dist(rng)), Int(d2)));
    auto r = dtriple::grat_as_square(w * w);
    REQUIRE(r);
    REQUIRE(*r * *r == w * w);
    REQUIRE((*r == w || *r == -w));
  }
}
