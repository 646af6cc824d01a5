#include <doctest.h>

#include "fm/rational.hpp"

using fm::ContinuedFraction;
using fm::Fraction;

TEST_CASE("fraction normal form") {
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(3, -6) == Fraction(-1, 2));
  CHECK(Fraction(-5, 1).str() == "-5");
  CHECK(Fraction(7, 0).is_infinite());
  CHECK(Fraction(-3, 0) == Fraction(1, 0));
  CHECK(Fraction(0, -9) == Fraction(0));
}

TEST_CASE("fraction arithmetic") {
  CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
  CHECK(Fraction(1, 2) - Fraction(1, 2) == Fraction(0));
  CHECK(Fraction(2, 3) * Fraction(9, 4) == Fraction(3, 2));
  CHECK(Fraction(5, 3).reciprocal() == Fraction(3, 5));
  CHECK(Fraction(0).reciprocal().is_infinite());
  CHECK(Fraction(1, 0).reciprocal() == Fraction(0));
  CHECK((Fraction(1, 0) + Fraction(7, 2)).is_infinite());
}

TEST_CASE("fraction overflow guarded") {
  Fraction big(INT64_MAX / 2, 3);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("continued fraction value") {
  CHECK(fm::cf_value({2, 1, 3}) == Fraction(11, 3));
  CHECK(fm::cf_value({7}) == Fraction(7));
  CHECK(fm::cf_value({-4}) == Fraction(-4));
  CHECK(fm::cf_value({2, 2}) == Fraction(5, 2));
  CHECK(fm::cf_value({2, 0}) == Fraction(1, 2));
  CHECK(fm::cf_value({-3, 1}) == Fraction(2, 3));
  CHECK(fm::cf_value({0, 0}).is_infinite());
  CHECK(fm::cf_value({}).is_infinite());
  // an intermediate infinity collapses cleanly: [[0,0,5]] = 5 + 1/inf
  CHECK(fm::cf_value({0, 0, 5}) == Fraction(5));
  CHECK(fm::cf_value({1, 0, 5}) == Fraction(6));
}

TEST_CASE("expansion round trips") {
  CHECK(fm::cf_from_fraction(Fraction(5)) == ContinuedFraction{5});
  CHECK(fm::cf_from_fraction(Fraction(11, 3)) == ContinuedFraction{2, 1, 3});
  CHECK(fm::cf_value(fm::cf_from_fraction(Fraction(-3, 2))) == Fraction(-3, 2));
  CHECK(fm::cf_value(fm::cf_from_fraction(Fraction(1, 0))).is_infinite());

  for (fm::i64 p = -50; p <= 50; ++p) {
    for (fm::i64 q = 1; q < (p < 0 ? -p : p); ++q) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      Fraction f(p, q);
      ContinuedFraction cf = fm::cf_from_fraction(f);
      CHECK(fm::cf_value(cf) == f);
      for (fm::i64 c : cf) {
        CHECK(c != 0);
        CHECK((c < 0) == (p < 0));
      }
    }
  }
  // reciprocals need the trailing-zero form but still round trip
  for (fm::i64 q = 2; q <= 20; ++q) {
    Fraction f(1, q);
    CHECK(fm::cf_value(fm::cf_from_fraction(f)) == f);
    CHECK(fm::cf_value(fm::cf_from_fraction(-f)) == -f);
  }
}
