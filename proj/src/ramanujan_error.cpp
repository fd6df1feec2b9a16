#include "harmcert/ramanujan_error.hpp"

#include "harmcert/constants.hpp"
#include "harmcert/errors.hpp"
#include "harmcert/tail_series.hpp"
#include "parallel.hpp"

#include <string>

namespace harmcert {

namespace {

Rational integer(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

// 1/12m - 1/120m^2 + 1/630m^3 - 1/1680m^4
Rational four_term_sum(TriangularM m) { return ramanujan_partial_sum(m, 4); }

} // namespace

EpsilonValue epsilon_from(HarmonicIndex n, const Rational& harmonic, unsigned precision_bits)
{
    const unsigned bits = precision_bits + 16;
    const Rational nn = integer(n.value());
    CertifiedReal e = CertifiedReal::from_rational(harmonic, bits);
    e -= ln_enclosure(nn * (nn + Rational(1)), bits) * Rational(1, 2);
    e -= gamma_constant(bits);
    return {n, e.with_precision(precision_bits)};
}

EpsilonValue epsilon(HarmonicIndex n, unsigned precision_bits)
{
    return epsilon_from(n, harmonic_exact(n), precision_bits);
}

CertifiedReal epsilon_step(std::uint64_t n, unsigned precision_bits)
{
    if (n < 2) {
        throw UsageError("epsilon_step needs n >= 2");
    }
    const unsigned bits = precision_bits + 8;
    const Rational nn = integer(n);
    CertifiedReal step = ln_enclosure((nn + Rational(1)) / (nn - Rational(1)), bits) * Rational(1, 2);
    step -= nn.reciprocal();
    return step.with_precision(precision_bits);
}

ThetaCertificate theta_from(HarmonicIndex n, const Rational& harmonic, const PrecisionPolicy& policy)
{
    const TriangularM m = m_of(n);
    const Rational head = four_term_sum(m);
    const Rational scale = Rational(2310) * m.as_rational().pow(5);
    const IntervalCertificate cert = certify_open_interval(
        [&](unsigned bits) { return (epsilon_from(n, harmonic, bits).enclosure - head) * scale; },
        Rational(0), Rational(1), policy);
    ThetaCertificate out{n, cert.enclosure.value_or(CertifiedReal(cert.bits)), cert.verdict,
                         cert.bits};
    return out;
}

ThetaCertificate theta(HarmonicIndex n, const PrecisionPolicy& policy)
{
    return theta_from(n, harmonic_exact(n), policy);
}

TruncationCheck alternating_truncation_check(HarmonicIndex n, unsigned terms,
                                             const PrecisionPolicy& policy)
{
    if (terms > 4) {
        throw UsageError("truncation check covers 0 to 4 terms");
    }
    const TriangularM m = m_of(n);
    const Rational partial = ramanujan_partial_sum(m, terms);
    const Rational next =
        ramanujan_coefficients()[terms] * m.as_rational().pow(-static_cast<int>(terms + 1));
    const Rational lo = next.sign() > 0 ? Rational(0) : next;
    const Rational hi = next.sign() > 0 ? next : Rational(0);
    const Rational harmonic = harmonic_exact(n);
    const IntervalCertificate cert = certify_open_interval(
        [&](unsigned bits) { return epsilon_from(n, harmonic, bits).enclosure - partial; }, lo, hi,
        policy);
    return TruncationCheck{n, terms, cert.enclosure.value_or(CertifiedReal(cert.bits)), next,
                           cert.verdict};
}

std::string_view to_string(IdentityId id)
{
    switch (id) {
    case IdentityId::PF1:
        return "PF1";
    case IdentityId::PF2:
        return "PF2";
    case IdentityId::KU3:
        return "KU3";
    case IdentityId::KU4:
        return "KU4";
    case IdentityId::KU5:
        return "KU5";
    case IdentityId::IBP1:
        return "IBP1";
    case IdentityId::IBP2:
        return "IBP2";
    case IdentityId::IBP3:
        return "IBP3";
    case IdentityId::POS_A:
        return "POS-A";
    case IdentityId::POS_B:
        return "POS-B";
    }
    return "?";
}

IdentityId parse_identity(std::string_view text)
{
    for (IdentityId id : {IdentityId::PF1, IdentityId::PF2, IdentityId::KU3, IdentityId::KU4,
                          IdentityId::KU5, IdentityId::IBP1, IdentityId::IBP2, IdentityId::IBP3,
                          IdentityId::POS_A, IdentityId::POS_B}) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw UsageError("unknown identity '" + std::string(text) + "'");
}

DecompositionResult decomposition_check(HarmonicIndex n, IdentityId stage, unsigned precision_bits)
{
    const unsigned bits = precision_bits + 16;
    const Rational inv_m = m_of(n).as_rational().reciprocal();
    const Rational two_terms = inv_m / Rational(12) - inv_m * inv_m / Rational(120);
    CertifiedReal rep(bits);
    switch (stage) {
    case IdentityId::IBP1: {
        const TailSpec first{{Rational(1, 3)}, 1, 1};
        rep = tail_rational_sum(n, first, bits) -
              tail_integral_sum(n, 2, bits) * Rational(2, 3);
        break;
    }
    case IdentityId::IBP2:
        rep = tail_integral_sum(n, 3, bits) * Rational(8, 15) + two_terms;
        break;
    case IdentityId::IBP3: {
        const TailSpec cubic{{Rational(1)}, 1, 3};
        rep = tail_rational_sum(n, cubic, bits) * Rational(8, 105) -
              tail_integral_sum(n, 4, bits) * Rational(16, 35) + two_terms;
        break;
    }
    default:
        throw UsageError("decomposition stage must be IBP1, IBP2 or IBP3");
    }
    DecompositionResult out{stage, rep.with_precision(precision_bits),
                            epsilon(n, precision_bits).enclosure, false};
    out.overlaps = out.representation.overlaps(out.direct);
    return out;
}

CertificationReport certify_theorem(std::uint64_t first, std::uint64_t last,
                                    const PrecisionPolicy& policy, unsigned threads)
{
    if (first < 1 || last < first) {
        throw UsageError("theorem certification needs a nonempty range of positive n");
    }
    policy.validate();
    CertificationReport report;
    report.meta.command = "certify theorem";
    report.meta.parameters = {{"n_first", std::to_string(first)}, {"n_last", std::to_string(last)}};
    report.meta.policy = policy;
    report.rows.resize(static_cast<std::size_t>(last - first + 1));
    detail::for_each_chunk(first, last, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        HarmonicCursor cursor{HarmonicIndex(lo)};
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const ThetaCertificate c = theta_from(HarmonicIndex(n), cursor.value(), policy);
            report.rows[static_cast<std::size_t>(n - first)] =
                make_row(n, "theta", c.theta, Rational(0), Rational(1), c.verdict);
            if (n < hi) {
                cursor.advance();
            }
        }
    });
    report.sort_rows();
    return report;
}

} // namespace harmcert
