#include "harmcert/errors.hpp"
#include "harmcert/harmonic.hpp"
#include "harmcert/ramanujan_error.hpp"

#include <string>

namespace harmcert {

namespace {

Rational integer(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

Rational inv(const Rational& x) { return x.reciprocal(); }

} // namespace

IdentityResult identity_check(IdentityId id, std::uint64_t k)
{
    if (k < 2) {
        throw UsageError("identities are checked for k >= 2");
    }
    const Rational kk = integer(k);
    const Rational km = kk - Rational(1);
    const Rational kp = kk + Rational(1);
    const Rational q = kk * kk - Rational(1); // k^2 - 1

    IdentityResult r{id, k, {}, {}, false};
    switch (id) {
    case IdentityId::PF1:
        r.lhs = Rational(1, 6) * (inv(km * kk) - inv(kk * kp));
        r.rhs = inv(Rational(3) * kk * q);
        break;
    case IdentityId::PF2:
        r.lhs = Rational(2, 15) * (inv(Rational(4) * km * km) - inv(Rational(2) * kk * km) -
                                   inv(Rational(4) * kp * kp) + inv(Rational(2) * kk * kp));
        r.rhs = Rational(2, 15) * inv(kk * q.pow(2));
        break;
    case IdentityId::KU3:
        r.lhs = inv(kk * q.pow(3)) -
                (inv(Rational(6) * km.pow(3) * kk.pow(3)) - inv(Rational(6) * kk.pow(3) * kp.pow(3)));
        r.rhs = Rational(-1, 3) * inv(kk.pow(3) * q.pow(3));
        break;
    case IdentityId::KU4:
        r.lhs = Rational(-8, 315) * inv(kk.pow(3) * q.pow(3)) -
                Rational(16, 315) * inv(kk * q.pow(4)) +
                Rational(1, 105) * (inv(km.pow(4) * kk.pow(4)) - inv(kk.pow(4) * kp.pow(4)));
        r.rhs = Rational(32, 315) * inv(kk.pow(3) * q.pow(4));
        break;
    case IdentityId::KU5:
        r.lhs = Rational(32, 315) * inv(kk.pow(3) * q.pow(4)) +
                Rational(128, 3465) * inv(kk * q.pow(5)) -
                Rational(16, 1155) * (inv(km.pow(5) * kk.pow(5)) - inv(kk.pow(5) * kp.pow(5)));
        r.rhs = Rational(-32, 3465) * (Rational(41) * kk * kk + Rational(3)) /
                (kk.pow(5) * q.pow(5));
        break;
    default:
        throw UsageError(std::string(to_string(id)) + " is not a per-term identity");
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

PositivityResult positivity_check(IdentityId id, std::uint64_t n, std::uint64_t k_limit)
{
    PositivityResult r;
    r.id = id;
    r.n = n;
    switch (id) {
    case IdentityId::POS_A: {
        if (n < 1 || k_limit <= n) {
            throw UsageError("POS-A needs 1 <= n < k_limit");
        }
        r.in_claimed_range = n >= 3;
        r.holds = true;
        const Rational a(6112, 15015);
        const Rational b(1024, 45045);
        for (std::uint64_t k = n + 1; k <= k_limit; ++k) {
            const Rational summand = a * integer(k).pow(-13) - b * integer(k - 1).pow(-15);
            ++r.checked;
            if (summand.sign() <= 0) {
                r.holds = false;
                r.first_violation = k;
                break;
            }
        }
        break;
    }
    case IdentityId::POS_B: {
        if (n < 1) {
            throw UsageError("POS-B needs n >= 1");
        }
        r.in_claimed_range = n >= 5;
        const Rational m = m_of(HarmonicIndex(n)).as_rational();
        const Rational shifted = integer(n) - Rational(1, 2);
        const Rational bracket = inv(Rational(2310) * m.pow(5)) -
                                 Rational(4688, 135135) * inv(shifted.pow(12));
        r.checked = 1;
        r.holds = bracket.sign() > 0;
        if (!r.holds) {
            r.first_violation = n;
        }
        break;
    }
    default:
        throw UsageError(std::string(to_string(id)) + " is not a positivity lemma");
    }
    return r;
}

} // namespace harmcert
