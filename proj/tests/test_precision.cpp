#include "harmcert/constants.hpp"
#include "harmcert/errors.hpp"
#include "harmcert/precision.hpp"
#include "harmcert/ramanujan_error.hpp"

#include <doctest.h>

#include <vector>

using namespace harmcert;

TEST_SUITE("precision")
{
    TEST_CASE("policy validation")
    {
        CHECK_NOTHROW(PrecisionPolicy{}.validate());
        CHECK_THROWS_AS((PrecisionPolicy{256, 128, 2}.validate()), UsageError);
        CHECK_THROWS_AS((PrecisionPolicy{128, 4096, 1}.validate()), UsageError);
        CHECK_THROWS_AS((PrecisionPolicy{0, 4096, 2}.validate()), UsageError);
    }

    TEST_CASE("escalation schedule")
    {
        std::vector<unsigned> seen;
        const unsigned last = escalate({128, 4096, 2}, [&](unsigned b) {
            seen.push_back(b);
            return false;
        });
        CHECK(seen == std::vector<unsigned>{128, 256, 512, 1024, 2048, 4096});
        CHECK(last == 4096);

        seen.clear();
        escalate({100, 1000, 3}, [&](unsigned b) {
            seen.push_back(b);
            return b >= 300;
        });
        CHECK(seen == std::vector<unsigned>{100, 300});
    }

    TEST_CASE("precision limit ends the schedule, domain errors do not")
    {
        std::vector<unsigned> seen;
        escalate({128, 4096, 2}, [&](unsigned b) -> bool {
            seen.push_back(b);
            if (b > 300) {
                throw PrecisionLimitError("cap");
            }
            throw DomainError("retry");
        });
        CHECK(seen == std::vector<unsigned>{128, 256, 512});
    }

    TEST_CASE("strict sign resolution")
    {
        const auto half = resolve_strict_sign(
            [](unsigned b) { return CertifiedReal::from_rational(Rational(1, 2), b); }, {});
        CHECK(half.sign == StrictSign::positive);
        CHECK(half.bits == 128);

        const auto theta_minus_one = resolve_strict_sign(
            [](unsigned b) { return theta(HarmonicIndex(1), PrecisionPolicy::fixed(b)).theta - Rational(1); },
            {});
        CHECK(theta_minus_one.sign == StrictSign::negative);

        const auto zero = resolve_strict_sign(
            [](unsigned b) { return gamma_constant(std::min(b, 600u)) - gamma_constant(std::min(b, 600u)); },
            {64, 4096, 2});
        CHECK(zero.sign == StrictSign::unresolved);
        CHECK(zero.bits == 4096);
    }

    TEST_CASE("open interval classification")
    {
        const auto x = CertifiedReal::from_rational(Rational(1, 3), 64);
        CHECK(classify_open_interval(x, Rational(0), Rational(1)) == Verdict::pass);
        CHECK(classify_open_interval(x, Rational(1, 2), Rational(1)) == Verdict::fail);
        CHECK(classify_open_interval(x, Rational(1, 3), Rational(1)) == Verdict::unresolved);
        const auto exact = CertifiedReal::from_rational(Rational(1, 2), 64);
        CHECK(classify_open_interval(exact, Rational(1, 2), Rational(1)) == Verdict::fail);
    }

    TEST_CASE("verdict algebra")
    {
        CHECK(combine(Verdict::pass, Verdict::pass) == Verdict::pass);
        CHECK(combine(Verdict::pass, Verdict::unresolved) == Verdict::unresolved);
        CHECK(combine(Verdict::unresolved, Verdict::fail) == Verdict::fail);
        CHECK(parse_verdict(to_string(Verdict::unresolved)) == Verdict::unresolved);
        CHECK_THROWS_AS(parse_verdict("maybe"), UsageError);
    }
}
