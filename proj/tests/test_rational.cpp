#include "doctest.h"
#include "luk/rational.hpp"

using luk::Rational;

TEST_CASE("parse_rational accepts p and p/q") {
  CHECK(luk::parse_rational("3/10") == Rational(3, 10));
  CHECK(luk::parse_rational("0") == 0);
  CHECK(luk::parse_rational("1") == 1);
  CHECK(luk::parse_rational("-2/4") == Rational(-1, 2));
  CHECK(luk::parse_rational("+7/7") == 1);
}

TEST_CASE("parsed values are in lowest terms with positive denominator") {
  Rational r = luk::parse_rational("6/10");
  CHECK(r.get_num() == 3);
  CHECK(r.get_den() == 5);
}

TEST_CASE("to_string renders p/q or bare p") {
  CHECK(luk::to_string(Rational(1, 2)) == "1/2");
  CHECK(luk::to_string(Rational(4, 2)) == "2");
  CHECK(luk::to_string(Rational(0)) == "0");
  CHECK(luk::to_string(luk::parse_rational("10/4")) == "5/2");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(luk::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(luk::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(luk::parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(luk::parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(luk::parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(luk::parse_rational(" 1/2"), std::invalid_argument);
}

TEST_CASE("in_unit_interval") {
  CHECK(luk::in_unit_interval(Rational(0)));
  CHECK(luk::in_unit_interval(Rational(1)));
  CHECK(luk::in_unit_interval(Rational(1, 3)));
  CHECK_FALSE(luk::in_unit_interval(Rational(-1, 3)));
  CHECK_FALSE(luk::in_unit_interval(Rational(4, 3)));
}
