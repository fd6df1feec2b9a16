#include "harmcert/errors.hpp"
#include "harmcert/rational.hpp"

#include <doctest.h>

using harmcert::Rational;

TEST_SUITE("rational")
{
    TEST_CASE("exact arithmetic")
    {
        CHECK(Rational(1, 12) - Rational(1, 120) == Rational(3, 40));
        CHECK(Rational(1, 6) * (Rational(1, 2) - Rational(1, 6)) == Rational(1, 18));
        CHECK(Rational(3, 4) / Rational(3, 8) == Rational(2));
        CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
        CHECK(Rational(-5, 7).abs() == Rational(5, 7));
        CHECK(Rational(-5, 7).reciprocal() == Rational(-7, 5));
    }

    TEST_CASE("canonical form")
    {
        const Rational q(5344, 26943840);
        CHECK(q == Rational(167, 841995));
        CHECK(q.numerator() == 167);
        CHECK(q.denominator() == 841995);
        CHECK(Rational(4, -6).to_string() == "-2/3");
        CHECK(Rational(10, 5).to_string() == "2");
    }

    TEST_CASE("parsing round trips")
    {
        CHECK(Rational::parse("-167/841995") == Rational(-167, 841995));
        CHECK(Rational::parse("42") == Rational(42));
        CHECK(Rational::parse("6/4") == Rational(3, 2));
        CHECK_THROWS_AS(Rational::parse("1/0"), harmcert::DomainError);
        CHECK_THROWS_AS(Rational::parse("abc"), harmcert::UsageError);
        const Rational big = Rational::parse("123456789012345678901234567890/7");
        CHECK(Rational::parse(big.to_string()) == big);
    }

    TEST_CASE("division by zero")
    {
        CHECK_THROWS_AS(Rational(1) / Rational(0), harmcert::DomainError);
        CHECK_THROWS_AS((void)Rational(0).reciprocal(), harmcert::DomainError);
    }

    TEST_CASE("ordering")
    {
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK(Rational(-1, 2) < Rational(0));
        CHECK(Rational(7, 3).sign() == 1);
        CHECK(Rational(0).is_zero());
    }

    TEST_CASE("binomial")
    {
        CHECK(harmcert::binomial(5, 2) == 10);
        CHECK(harmcert::binomial(64, 32) == mpz_class("1832624140942590534"));
        CHECK(harmcert::binomial(3, 5) == 0);
    }
}
