#include "harmcert/constants.hpp"
#include "harmcert/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <string>

using harmcert::CertifiedReal;
using harmcert::Rational;

TEST_SUITE("constants")
{
    TEST_CASE("embedded digits match MPFR")
    {
        const std::string embedded(harmcert::euler_gamma_digits);
        REQUIRE(embedded.size() == 202);
        CHECK(embedded == oracle::mpfr_gamma_decimals(200));
        CHECK(embedded.substr(0, 62) == oracle::gamma_60);
    }

    TEST_CASE("gamma enclosures")
    {
        // "0.57721..." : the 20-bit enclosure sits inside [0.57721, 0.57722]
        const auto g20 = harmcert::gamma_constant(20);
        CHECK(g20.certainly_greater_than(oracle::decimal("0.57721")));
        CHECK(g20.certainly_less_than(oracle::decimal("0.57722")));
        const auto g170 = harmcert::gamma_constant(170);
        const auto d = harmcert::to_decimal(g170, 50);
        CHECK(d.midpoint == "5.7721566490153286060651209008240243104215933593992e-1");
        const auto g64 = harmcert::gamma_constant(64);
        const auto g128 = harmcert::gamma_constant(128);
        CHECK(g64.contains(g128));
        CHECK_THROWS_AS(harmcert::gamma_constant(harmcert::max_gamma_bits + 1),
                        harmcert::PrecisionLimitError);
    }

    TEST_CASE("Euler-Maclaurin gamma agrees with the embedded constant")
    {
        const auto em = harmcert::gamma_euler_maclaurin(256, 100000, 6);
        const auto embedded = harmcert::gamma_constant(256);
        CHECK(em.overlaps(embedded));
        CHECK(em.radius_double() < 1e-55);
        const auto d = harmcert::to_decimal(em, 52);
        CHECK(d.midpoint.substr(0, 51) == "5.7721566490153286060651209008240243104215933593992");
    }
}
