#include <doctest.h>

#include <cstdint>

#include "pqech/arith.hpp"
#include "pqech/rational.hpp"

using namespace pqech;

TEST_CASE("checked arithmetic throws instead of wrapping") {
  CHECK(arith::add(2, 3) == 5);
  CHECK(arith::mul(-4, 5) == -20);
  CHECK_THROWS_AS(arith::add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(arith::mul(INT64_MAX / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(arith::sub(INT64_MIN, 1), OverflowError);
  CHECK_THROWS_AS(arith::neg(INT64_MIN), OverflowError);
}

TEST_CASE("isqrt is exact around perfect squares") {
  for (Int r = 0; r < 3000; ++r) {
    CHECK(arith::isqrt(r * r) == r);
    if (r > 0) CHECK(arith::isqrt(r * r - 1) == r - 1);
  }
  const Int big = 3037000499;  // floor(sqrt(2^63 - 1))
  CHECK(arith::isqrt(big * big) == big);
  CHECK(arith::isqrt(big * big - 1) == big - 1);
  CHECK(arith::isqrt(INT64_MAX) == big);
  CHECK_THROWS_AS(arith::isqrt(-1), InputError);
}

TEST_CASE("floor division and residues") {
  CHECK(arith::floor_div(7, 2) == 3);
  CHECK(arith::floor_div(-7, 2) == -4);
  CHECK(arith::floor_div(7, -2) == -4);
  CHECK(arith::mod(-1, 3) == 2);
  CHECK(arith::mod(4, 3) == 1);
  CHECK_THROWS_AS(arith::mod(1, 0), InputError);
}

TEST_CASE("rationals normalize and order exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 3).ceil() == 2);
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(4).str() == "4");
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
  CHECK_THROWS_AS(Rational::parse("1/"), InputError);
  CHECK_THROWS_AS(Rational::parse("1.x"), InputError);
  CHECK_THROWS_AS(Rational::parse("99999999999999999999"), OverflowError);
}
