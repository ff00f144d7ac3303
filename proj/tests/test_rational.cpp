#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walkhg/rational.hpp"

using walkhg::Rational;

TEST_CASE("canonical form: gcd one, positive denominator") {
  CHECK(Rational(2, 6).str() == "1/3");
  CHECK(Rational(-2, 6).str() == "-1/3");
  CHECK(Rational(2, -6).str() == "-1/3");
  CHECK(Rational(-2, -6).str() == "1/3");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(7).str() == "7/1");
}

TEST_CASE("equality is canonical-form equality") {
  CHECK(Rational(1, 3) == Rational(2, 6));
  CHECK(Rational(1, 3) != Rational(1, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("exact arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2/1");
  CHECK(a + a + a == Rational(1));
}

TEST_CASE("parse round-trips") {
  for (const char* s : {"2/3", "-5/7", "0/1", "41/152"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("division by zero rejected") {
  CHECK_THROWS(Rational(1, 0));
  Rational a(1, 2);
  CHECK_THROWS(a / Rational(0));
}

TEST_CASE("no precision loss on long sums") {
  Rational sum(0);
  for (int k = 1; k <= 2000; ++k) sum += Rational(1, k);
  Rational again(0);
  for (int k = 2000; k >= 1; --k) again += Rational(1, k);
  CHECK(sum == again);
}
