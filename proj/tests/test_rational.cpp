#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polycosec/rational.hpp"

#include <random>

using namespace polycosec;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rendering suppresses unit denominators") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-12, 4).str() == "-3");
    CHECK(Rational(7, 2).str() == "7/2");
}

TEST_CASE("parse accepts p and p/q, rejects junk") {
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("-13") == Rational(-13));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("string round trip on random values") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 500; ++i) {
        const Rational r = testing::random_rational(rng);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field laws on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = testing::random_rational(rng);
        const Rational b = testing::random_rational(rng);
        const Rational c = testing::random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("integer powers") {
    CHECK(int_pow(3, 2) == Rational(9));
    CHECK(int_pow(3, -2) == Rational(1, 9));
    CHECK(int_pow(5, 0) == Rational(1));
    CHECK(int_pow(-2, 3) == Rational(-8));
    CHECK(int_pow(-2, -3) == Rational(-1, 8));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(int_pow(0, -1), std::domain_error);
}
