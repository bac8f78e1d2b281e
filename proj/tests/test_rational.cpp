#include <doctest.h>

#include "gvc/rational.hpp"

using namespace gvc;

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("binomial")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(30, 15) == Int("155117520"));
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == factorial(n) / (factorial(k) * factorial(n - k)));
}

TEST_CASE("falling factorial")
{
    CHECK(falling_factorial(4, 0) == 1);
    CHECK(falling_factorial(4, 2) == 12);
    CHECK(falling_factorial(4, 4) == 24);
    CHECK(falling_factorial(4, 5) == 0);
}

TEST_CASE("rational formatting")
{
    CHECK(format_rational(Rational(3)) == "3");
    CHECK(format_rational(Rational(-1) / 2) == "-1/2");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(6) / 4) == "3/2");
    CHECK(format_rational_pair(Rational(3)) == "3/1");
    CHECK(format_rational_pair(Rational(-1) / 2) == "-1/2");
}

TEST_CASE("canonical representation invariants")
{
    // lowest terms, positive denominator, unique zero
    const Rational a = Rational(6) / Rational(-4);
    CHECK(numerator(a) == -3);
    CHECK(denominator(a) == 2);
    const Rational z = a - a;
    CHECK(numerator(z) == 0);
    CHECK(denominator(z) == 1);
}
