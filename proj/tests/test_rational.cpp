#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "polyopt/rational.hpp"

using namespace polyopt;

TEST_CASE("exact fraction arithmetic", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(rat_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
  CHECK(rat_mul(Rational(2, 3), Rational(9, 4)) == Rational(3, 2));
}

TEST_CASE("construction canonicalizes", "[rational]") {
  const Rational r(2, 4);
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);
  const Rational neg(3, -6);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);
}

TEST_CASE("comparison is canonical-form equality", "[rational]") {
  CHECK(rat_cmp(Rational(7, 3), Rational(21, 9)) == std::strong_ordering::equal);
  CHECK(Rational(7, 3) == Rational(21, 9));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("division by zero is a domain error", "[rational]") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and print round-trip", "[rational]") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("-14/4") == Rational(-7, 2));
  CHECK(Rational(5, 6).str() == "5/6");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);

  testutil::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r = rng.ratio(50, 40);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field laws hold exactly on random rationals", "[rational][property]") {
  testutil::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = rng.ratio(20, 10), b = rng.ratio(20, 10), c = rng.ratio(20, 10);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("canonical form is idempotent", "[rational][property]") {
  testutil::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Rational r = rng.ratio(30, 20);
    const Rational again(r.num(), r.den());
    CHECK(again.num() == r.num());
    CHECK(again.den() == r.den());
  }
}
