#include "harmcert/errors.hpp"
#include "harmcert/harmonic.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <thread>
#include <vector>

using namespace harmcert;

TEST_SUITE("harmonic")
{
    TEST_CASE("exact harmonic numbers")
    {
        CHECK(harmonic_exact(HarmonicIndex(1)) == Rational(1));
        CHECK(harmonic_exact(HarmonicIndex(4)) == Rational(25, 12));
        CHECK(harmonic_exact(HarmonicIndex(10)) == Rational(7381, 2520));
        for (std::uint64_t n : {127u, 128u, 129u, 255u, 256u, 1000u, 1500u}) {
            CHECK(harmonic_exact(HarmonicIndex(n)) == oracle::harmonic(n));
        }
        CHECK_THROWS_AS(HarmonicIndex(0), UsageError);
    }

    TEST_CASE("concurrent callers see the same values")
    {
        std::vector<Rational> results(8);
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < results.size(); ++i) {
            pool.emplace_back([&, i] { results[i] = harmonic_exact(HarmonicIndex(700 + 37 * i)); });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (std::size_t i = 0; i < results.size(); ++i) {
            CHECK(results[i] == oracle::harmonic(700 + 37 * i));
        }
    }

    TEST_CASE("cursor walks consecutive values")
    {
        HarmonicCursor c(HarmonicIndex(3));
        CHECK(c.value() == Rational(11, 6));
        c.advance();
        CHECK(c.index().value() == 4);
        CHECK(c.value() == Rational(25, 12));
    }

    TEST_CASE("triangular numbers")
    {
        CHECK(m_of(HarmonicIndex(1)).value() == 1);
        CHECK(m_of(HarmonicIndex(4)).value() == 10);
        CHECK(m_of(HarmonicIndex(10)).value() == 55);
        CHECK(m_of(HarmonicIndex(10000)).as_rational() == Rational(50005000));
    }

    TEST_CASE("Bernoulli numbers")
    {
        CHECK(bernoulli(2) == Rational(1, 6));
        CHECK(bernoulli(4) == Rational(-1, 30));
        CHECK(bernoulli(12) == Rational(-691, 2730));
        for (unsigned k = 2; k <= max_bernoulli_index; k += 2) {
            CHECK(bernoulli(k) == oracle::bernoulli(k));
        }
        CHECK_THROWS(bernoulli(3));
        CHECK_THROWS(bernoulli(max_bernoulli_index + 2));
    }

    TEST_CASE("expansion coefficients")
    {
        const auto& c = ramanujan_coefficients();
        CHECK(c[0] == Rational(1, 12));
        CHECK(c[1] == Rational(-1, 120));
        CHECK(c[2] == Rational(1, 630));
        CHECK(c[3] == Rational(-1, 1680));
        CHECK(c[4] == Rational(1, 2310));
        CHECK(ramanujan_partial_sum(m_of(HarmonicIndex(1)), 2) == Rational(3, 40));
        CHECK(ramanujan_partial_sum(m_of(HarmonicIndex(1)), 0) == Rational(0));
    }

    TEST_CASE("truncated expansion")
    {
        const auto t0 = ramanujan_approx(HarmonicIndex(1), 0, 128);
        CHECK(std::abs(t0.mid_double() - oracle::half_ln2_plus_gamma) < 1e-15);
        const auto t2 = ramanujan_approx(HarmonicIndex(1), 2, 128);
        CHECK((t2 - t0).overlaps(CertifiedReal::from_rational(Rational(3, 40), 128)));

        const Rational h10(7381, 2520);
        const auto t5 = ramanujan_approx(HarmonicIndex(10), 5, 128);
        const Rational slack = Rational(1) / (Rational(2310) * Rational(55).pow(5));
        CHECK(t5.certainly_less_than(h10 + slack));
        CHECK(t5.certainly_greater_than(h10 - slack));
        CHECK_THROWS(ramanujan_approx(HarmonicIndex(1), 6, 128));
    }

    TEST_CASE("Euler expansion")
    {
        CHECK(bernoulli(2) / Rational(2) == Rational(1, 12));
        const Rational h10(7381, 2520);
        const auto j1 = euler_approx(HarmonicIndex(10), 1, 128);
        CHECK(j1.remainder_bound == Rational(1, 1200000));
        const auto diff = CertifiedReal::from_rational(h10, 128) - j1.value;
        CHECK(diff.certainly_less_than(j1.remainder_bound));
        CHECK(diff.certainly_greater_than(-j1.remainder_bound));
        // explicit form ln 10 + gamma + 1/20 - 1/1200
        CHECK(std::abs(j1.value.mid_double() - (2.302585092994045684 + 0.5772156649015328606 + 0.05 - 1.0 / 1200)) <
              1e-15);

        const auto j0 = euler_approx(HarmonicIndex(1), 0, 128);
        CHECK(std::abs(j0.value.mid_double() - 1.0772156649015329) < 1e-15);
        CHECK(std::abs(1.0 - j0.value.mid_double()) < 1.0 / 12);
    }
}
