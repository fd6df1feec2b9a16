#include "harmcert/errors.hpp"
#include "harmcert/ramanujan_error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace harmcert;

TEST_SUITE("ramanujan_error")
{
    TEST_CASE("epsilon spot values")
    {
        const auto e1 = epsilon(HarmonicIndex(1), 128).enclosure;
        CHECK(oracle::within(e1, "0.0762107448184944846848718491885092849", Rational::parse("1/10000000000000000000000000000000000000")));
        CHECK(std::abs(e1.mid_double() - oracle::epsilon_1) < 1e-17);
        const auto e4 = epsilon(HarmonicIndex(4), 128).enclosure;
        CHECK(std::abs(e4.mid_double() - oracle::epsilon_4) < 1e-18);
        CHECK(std::abs(e4.mid_double() - 0.008237) > 1e-5); // the often-quoted 0.008237 is off
    }

    TEST_CASE("epsilon against MPFR constants")
    {
        for (std::uint64_t n : {1u, 2u, 3u, 17u, 50u, 999u}) {
            const auto mine = to_decimal(epsilon(HarmonicIndex(n), 300).enclosure, 60).midpoint;
            CHECK(mine.substr(0, 55) == oracle::epsilon_decimal(n, 400, 60).substr(0, 55));
        }
    }

    TEST_CASE("epsilon decreases")
    {
        const auto e1 = epsilon(HarmonicIndex(1), 128).enclosure;
        const auto e2 = epsilon(HarmonicIndex(2), 128).enclosure;
        const auto e3 = epsilon(HarmonicIndex(3), 128).enclosure;
        CHECK((e1 - e2).is_positive());
        CHECK((e2 - e3).is_positive());
        CHECK(epsilon(HarmonicIndex(5), 64).enclosure.radius_double() <= std::ldexp(1.0, 8 - 64));
    }

    TEST_CASE("recurrence step")
    {
        CHECK(std::abs(epsilon_step(2, 128).mid_double() - 0.049306144334054846) < 1e-16);
        CHECK(std::abs(epsilon_step(3, 128).mid_double() - 0.013240256946639328) < 1e-15);
        for (std::uint64_t n = 2; n <= 60; ++n) {
            const auto lhs = epsilon(HarmonicIndex(n - 1), 160).enclosure - epsilon(HarmonicIndex(n), 160).enclosure;
            CHECK(lhs.overlaps(epsilon_step(n, 160)));
        }
        CHECK_THROWS_AS(epsilon_step(1, 64), UsageError);
    }

    TEST_CASE("theta")
    {
        const auto t1 = theta(HarmonicIndex(1));
        CHECK(t1.verdict == Verdict::pass);
        CHECK(std::abs(t1.theta.mid_double() - oracle::theta_1) < 1e-15);
        CHECK(t1.theta.certainly_greater_than(oracle::decimal("0.505144")));
        CHECK(t1.theta.certainly_less_than(oracle::decimal("0.505164")));
        for (std::uint64_t n : {2u, 3u, 4u, 100u}) {
            CHECK(theta(HarmonicIndex(n)).verdict == Verdict::pass);
        }
    }

    TEST_CASE("theta needs more precision for large n")
    {
        const auto fixed = theta(HarmonicIndex(10000), PrecisionPolicy::fixed(128));
        CHECK(fixed.verdict != Verdict::fail);
        const auto escalated = theta(HarmonicIndex(10000));
        CHECK(escalated.verdict == Verdict::pass);
        CHECK(escalated.bits >= 128);
        // Theta_n = 1 - 1.224/m + ...
        CHECK(std::abs((1 - escalated.theta.mid_double()) * 50005000.0 - 1.2244) < 1e-3);
    }

    TEST_CASE("alternating truncation")
    {
        const auto t0 = alternating_truncation_check(HarmonicIndex(1), 0);
        CHECK(t0.verdict == Verdict::pass);
        CHECK(t0.next_term == Rational(1, 12));
        const auto t1 = alternating_truncation_check(HarmonicIndex(1), 1);
        CHECK(t1.verdict == Verdict::pass);
        CHECK(t1.residual.is_negative());
        CHECK(std::abs(t1.residual.mid_double() + 0.007122588) < 1e-8);
        const auto t4 = alternating_truncation_check(HarmonicIndex(10), 4);
        CHECK(t4.verdict == Verdict::pass);
        CHECK(t4.next_term == Rational(1) / (Rational(2310) * Rational(55).pow(5)));
        CHECK_THROWS_AS(alternating_truncation_check(HarmonicIndex(1), 5), UsageError);
    }

    TEST_CASE("batch certification")
    {
        const auto report = certify_theorem(1, 300, {}, 2);
        CHECK(report.rows.size() == 300);
        CHECK(report.aggregate() == Verdict::pass);
        CHECK(report.rows.front().n == 1);
        CHECK(report.rows.back().n == 300);
        CHECK(report.rows.front().quantity == "theta");
        CHECK(report.rows.front().bound_hi == "1");
        const auto single = certify_theorem(1, 300, {}, 1);
        CHECK(single.rows == report.rows);
        CHECK_THROWS_AS(certify_theorem(0, 3), UsageError);
        CHECK_THROWS_AS(certify_theorem(5, 3), UsageError);
    }
}
