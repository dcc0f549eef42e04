#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

using credal::lex_less;
using credal::ParseError;
using credal::Point;
using credal::Rational;

TEST_CASE("construction canonicalizes to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), credal::InvariantViolationError);
}

TEST_CASE("parse accepts fractions, integers, and finite decimals") {
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("+2/6") == Rational(1, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0.133") == Rational(133, 1000));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("2.") == Rational(2));
    CHECK(Rational::parse("012") == Rational(12));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1e5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("-"), ParseError);
    CHECK_THROWS_AS(Rational::parse("."), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), ParseError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 10) * Rational(10) == Rational(1));
    CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
    CHECK(Rational(3, 7) / Rational(3, 7) == Rational(1));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), credal::InvariantViolationError);

    // A sum that is famously wrong in binary floating point.
    Rational tenth(1, 10);
    Rational sum;
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == Rational(1));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(0).is_zero());
}

TEST_CASE("exact text form") {
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse(Rational(133, 1000).str()) == Rational(133, 1000));
}

TEST_CASE("rounded text form, half away from zero") {
    CHECK(Rational(133, 1000).str_rounded(2) == "0.13");
    CHECK(Rational(133, 1000).str_rounded(3) == "0.133");
    CHECK(Rational(1, 8).str_rounded(2) == "0.13");
    CHECK(Rational(-1, 8).str_rounded(2) == "-0.13");
    CHECK(Rational(1, 4).str_rounded(3) == "0.25");
    CHECK(Rational(2).str_rounded(2) == "2");
    CHECK(Rational(0).str_rounded(3) == "0");
    CHECK(Rational(999, 1000).str_rounded(2) == "1");
    CHECK(Rational(-999, 1000).str_rounded(2) == "-1");
    CHECK(Rational(1, 3).str_rounded(3) == "0.333");
    CHECK(Rational(2, 3).str_rounded(3) == "0.667");
}

TEST_CASE("point helpers") {
    Point a{Rational(1), Rational(2)};
    Point b{Rational(3), Rational(-1)};
    CHECK(dot(a, b) == Rational(1));
    CHECK(lex_less(Point{Rational(0), Rational(9)}, Point{Rational(1), Rational(0)}));
    CHECK(lex_less(Point{Rational(1), Rational(0)}, Point{Rational(1), Rational(1)}));
    CHECK(!lex_less(a, a));
}
