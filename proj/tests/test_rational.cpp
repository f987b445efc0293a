#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bicis/errors.hpp"
#include "bicis/rational.hpp"
#include "support/testutil.hpp"

using bicis::Rational;

TEST_CASE("construction reduces and normalizes") {
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(11, 2).to_string() == "11/2");
  CHECK(Rational(0, 7) == Rational());
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), bicis::UsageError);
  CHECK_THROWS_AS(Rational(1, -2), bicis::UsageError);
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(4, 1) == Rational(4, 1));
  CHECK(Rational(11, 2) < Rational(6, 1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  // Values a double comparison would conflate.
  const auto a = Rational::from_ratio((static_cast<__int128>(1) << 70) + 1, 3);
  const auto b = Rational::from_ratio((static_cast<__int128>(1) << 70), 3);
  CHECK(b < a);
}

TEST_CASE("minus infinity sits below everything") {
  const auto bottom = Rational::minus_infinity();
  CHECK(bottom.is_minus_infinity());
  CHECK(bottom < Rational(0, 1));
  CHECK(bottom < Rational(-1000, 7));
  CHECK(bottom == Rational::minus_infinity());
  CHECK_THROWS_AS(bottom + Rational(1, 1), bicis::UsageError);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(3, 2) + Rational(7, 2) == Rational(5, 1));
  CHECK(Rational(3, 2) - Rational(7, 2) == Rational(-2, 1));
  CHECK(Rational(3, 2).scaled(2) == Rational(3, 1));
  CHECK(Rational(-5, 3).clamped_nonnegative() == Rational());
  CHECK(Rational(5, 3).clamped_nonnegative() == Rational(5, 3));
}

TEST_CASE("rendering") {
  CHECK(Rational(5, 1).to_string() == "5");
  CHECK(Rational(11, 2).to_double() == doctest::Approx(5.5));
  CHECK(Rational::minus_infinity().to_string() == "-inf");
  CHECK(bicis::int128_to_string(-1) == "-1");
  CHECK(bicis::int128_to_string((static_cast<__int128>(1) << 100)) ==
        "1267650600228229401496703205376");
}

TEST_CASE("comparison agrees with an independent 256-bit routine") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 20000; ++i) {
    // Numerators up to ~2^81, denominators up to ~2^40: the documented
    // envelope of influence arithmetic.
    const auto num_a = static_cast<__int128>(rng() >> 20) * static_cast<std::int64_t>(rng() >> 27);
    const auto num_b = static_cast<__int128>(rng() >> 20) * static_cast<std::int64_t>(rng() >> 27);
    const auto den_a = static_cast<__int128>((rng() >> 24) + 1);
    const auto den_b = static_cast<__int128>((rng() >> 24) + 1);
    const auto a = Rational::from_ratio(i % 5 == 0 ? -num_a : num_a, den_a);
    const auto b = Rational::from_ratio(i % 7 == 0 ? -num_b : num_b, den_b);
    const int expected =
        testutil::cmp_fractions_256(a.numerator(), a.denominator(), b.numerator(), b.denominator());
    const auto got = a <=> b;
    if (expected < 0) {
      CHECK(got == std::strong_ordering::less);
    } else if (expected > 0) {
      CHECK(got == std::strong_ordering::greater);
    } else {
      CHECK(got == std::strong_ordering::equal);
    }
  }
}
