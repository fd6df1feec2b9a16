#include "harmcert/errors.hpp"
#include "harmcert/ramanujan_error.hpp"
#include "harmcert/tail_series.hpp"

#include <doctest.h>

using namespace harmcert;

namespace {

Rational r(long k) { return Rational(k); }

} // namespace

TEST_SUITE("identities")
{
    TEST_CASE("hand-evaluated cases at k = 2")
    {
        const auto pf1 = identity_check(IdentityId::PF1, 2);
        CHECK(pf1.holds);
        CHECK(pf1.lhs == Rational(1, 18));
        CHECK(pf1.rhs == Rational(1, 18));

        const auto ku3 = identity_check(IdentityId::KU3, 2);
        CHECK(ku3.holds);
        CHECK(ku3.lhs == Rational(-1, 648));
        CHECK(Rational(1, 54) - (Rational(1, 48) - Rational(1, 1296)) == Rational(-1, 648));

        const auto ku5 = identity_check(IdentityId::KU5, 2);
        CHECK(ku5.holds);
        CHECK(ku5.lhs == Rational(-167, 841995));
        CHECK(ku5.rhs == Rational(-167, 841995));
        CHECK(Rational(-32, 3465) * Rational(167, 7776) == Rational(-167, 841995));
    }

    TEST_CASE("all exact identities hold for k up to 400")
    {
        for (std::uint64_t k = 2; k <= 400; ++k) {
            for (const IdentityId id : exact_identities) {
                const auto res = identity_check(id, k);
                CHECK_MESSAGE(res.holds, to_string(id), " at k = ", k);
                CHECK(res.lhs == res.rhs);
            }
        }
    }

    TEST_CASE("telescoped PF1 from independent partial fractions")
    {
        // 1/(k(k^2-1)) = 1/2 (1/((k-1)k) - 1/(k(k+1)))
        for (long k = 2; k < 50; ++k) {
            const Rational lhs = Rational(1) / (r(k) * (r(k) * r(k) - r(1)));
            const Rational rhs = Rational(1, 2) * (Rational(1) / (r(k - 1) * r(k)) - Rational(1) / (r(k) * r(k + 1)));
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("non-identity ids are rejected")
    {
        CHECK_THROWS_AS(identity_check(IdentityId::IBP1, 2), UsageError);
        CHECK_THROWS_AS(identity_check(IdentityId::PF1, 1), UsageError);
        CHECK(parse_identity("KU5") == IdentityId::KU5);
        CHECK(parse_identity("POS-A") == IdentityId::POS_A);
        CHECK(to_string(IdentityId::POS_B) == "POS-B");
        CHECK_THROWS_AS(parse_identity("KU6"), UsageError);
    }

    TEST_CASE("decomposition stages overlap the direct value")
    {
        for (std::uint64_t n : {1u, 2u, 5u, 10u, 50u}) {
            for (const IdentityId stage : {IdentityId::IBP1, IdentityId::IBP2, IdentityId::IBP3}) {
                const auto res = decomposition_check(HarmonicIndex(n), stage, 256);
                CHECK_MESSAGE(res.overlaps, to_string(stage), " at n = ", n);
                CHECK(res.representation.width_double() < 1e-20);
                CHECK(res.direct.width_double() < 1e-20);
            }
        }
        CHECK_THROWS_AS(decomposition_check(HarmonicIndex(3), IdentityId::KU3, 128), UsageError);
    }

    TEST_CASE("a perturbed representation is caught")
    {
        // IBP2 with the m^-2 coefficient wrong by 1/10^6 must not overlap
        const auto res = decomposition_check(HarmonicIndex(5), IdentityId::IBP2, 256);
        const auto wrong = res.representation + Rational(1, 1000000) / Rational(225);
        CHECK_FALSE(wrong.overlaps(res.direct));
    }

    TEST_CASE("positivity lemmas")
    {
        const auto a = positivity_check(IdentityId::POS_A, 3, 4);
        CHECK(a.holds);
        CHECK(a.in_claimed_range);
        CHECK(a.checked == 1);
        CHECK(Rational(6112, 15015) * Rational(4).pow(-13) > Rational(1024, 45045) * Rational(3).pow(-15));

        const auto a2 = positivity_check(IdentityId::POS_A, 2, 3);
        CHECK_FALSE(a2.in_claimed_range);

        const auto b = positivity_check(IdentityId::POS_B, 5);
        CHECK(b.holds);
        CHECK(Rational(1) / (Rational(2310) * Rational(15).pow(5)) >
              Rational(4688, 135135) / Rational(9, 2).pow(12));

        CHECK_FALSE(positivity_check(IdentityId::POS_B, 1).in_claimed_range);
        CHECK(positivity_check(IdentityId::POS_A, 3, 2000).holds);
        CHECK_THROWS_AS(positivity_check(IdentityId::POS_A, 3, 3), UsageError);
        CHECK_THROWS_AS(positivity_check(IdentityId::KU3, 3, 10), UsageError);
    }
}
