#include "harmcert/lodge.hpp"

#include "harmcert/errors.hpp"
#include "harmcert/ramanujan_error.hpp"
#include "parallel.hpp"

#include <string>

namespace harmcert {

namespace {

Rational lodge_expansion(const Rational& m)
{
    return Rational(6, 5) - Rational(19, 175) / m + Rational(13, 250) / (m * m);
}

} // namespace

LodgeQuantities lodge_from_epsilon(HarmonicIndex n, const CertifiedReal& eps)
{
    if (!eps.is_positive()) {
        throw DomainError("eps_n enclosure is not certified positive");
    }
    const Rational m = m_of(n).as_rational();
    const Rational twelve_m = Rational(12) * m;
    CertifiedReal lambda = eps - (twelve_m + BoundConstants::lodge_shift()).reciprocal();
    CertifiedReal rho = BoundConstants::lambda_upper() / m.pow(3) - lambda;
    CertifiedReal capital = Rational(1) / eps - twelve_m;
    CertifiedReal delta = (lodge_expansion(m) - capital) * m.pow(3);
    CertifiedReal cesaro = eps * twelve_m;
    return {n, std::move(lambda), std::move(rho), std::move(capital), std::move(delta),
            std::move(cesaro)};
}

std::array<std::pair<Rational, Rational>, 5> lodge_intervals(HarmonicIndex n)
{
    const Rational m = m_of(n).as_rational();
    const Rational expansion = lodge_expansion(m);
    return {{
        {expansion - BoundConstants::delta_upper() / m.pow(3), expansion}, // capital_lambda
        {Rational(0), Rational(1)},                                       // cesaro_c
        {Rational(0), BoundConstants::delta_upper()},                     // delta
        {Rational(0), BoundConstants::lambda_upper() / m.pow(3)},         // lambda
        {Rational(0), BoundConstants::rho_upper() / m.pow(4)},            // rho
    }};
}

Verdict LodgeCertificate::verdict() const
{
    Verdict v = Verdict::pass;
    for (const auto& b : bounds) {
        v = combine(v, b.verdict);
    }
    return v;
}

LodgeCertificate lodge_quantities_from(HarmonicIndex n, const Rational& harmonic,
                                       const PrecisionPolicy& policy)
{
    const auto intervals = lodge_intervals(n);
    const unsigned initial = policy.initial_bits;
    LodgeCertificate cert{n,
                          {{
                              {lodge_quantity_names[0], intervals[0].first, intervals[0].second,
                               CertifiedReal(initial)},
                              {lodge_quantity_names[1], intervals[1].first, intervals[1].second,
                               CertifiedReal(initial)},
                              {lodge_quantity_names[2], intervals[2].first, intervals[2].second,
                               CertifiedReal(initial)},
                              {lodge_quantity_names[3], intervals[3].first, intervals[3].second,
                               CertifiedReal(initial)},
                              {lodge_quantity_names[4], intervals[4].first, intervals[4].second,
                               CertifiedReal(initial)},
                          }},
                          0};
    cert.bits = escalate(policy, [&](unsigned bits) {
        const CertifiedReal eps = epsilon_from(n, harmonic, bits).enclosure;
        const LodgeQuantities q = lodge_from_epsilon(n, eps);
        const std::array<const CertifiedReal*, 5> values{&q.capital_lambda, &q.cesaro_c, &q.delta,
                                                         &q.lambda, &q.rho};
        bool settled = true;
        for (std::size_t i = 0; i < cert.bounds.size(); ++i) {
            auto& b = cert.bounds[i];
            if (b.verdict != Verdict::unresolved) {
                continue;
            }
            b.value = *values[i];
            b.verdict = classify_open_interval(b.value, b.lo, b.hi);
            settled = settled && b.verdict != Verdict::unresolved;
        }
        return settled;
    });
    return cert;
}

LodgeCertificate lodge_quantities(HarmonicIndex n, const PrecisionPolicy& policy)
{
    return lodge_quantities_from(n, harmonic_exact(n), policy);
}

CertificationReport certify_corollaries(std::uint64_t first, std::uint64_t last,
                                        const PrecisionPolicy& policy, unsigned threads)
{
    if (first < 1 || last < first) {
        throw UsageError("corollary certification needs a nonempty range of positive n");
    }
    policy.validate();
    CertificationReport report;
    report.meta.command = "certify corollaries";
    report.meta.parameters = {{"n_first", std::to_string(first)}, {"n_last", std::to_string(last)}};
    report.meta.policy = policy;
    const std::size_t per_n = lodge_quantity_names.size();
    report.rows.resize(static_cast<std::size_t>(last - first + 1) * per_n);
    detail::for_each_chunk(first, last, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        HarmonicCursor cursor{HarmonicIndex(lo)};
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const LodgeCertificate c = lodge_quantities_from(HarmonicIndex(n), cursor.value(), policy);
            for (std::size_t i = 0; i < per_n; ++i) {
                const auto& b = c.bounds[i];
                report.rows[static_cast<std::size_t>(n - first) * per_n + i] =
                    make_row(n, std::string(b.quantity), b.value, b.lo, b.hi, b.verdict);
            }
            if (n < hi) {
                cursor.advance();
            }
        }
    });
    report.sort_rows();
    return report;
}

std::string_view to_string(LimitQuantity q)
{
    switch (q) {
    case LimitQuantity::scaled_lambda:
        return "scaled_lambda";
    case LimitQuantity::scaled_rho:
        return "scaled_rho";
    case LimitQuantity::delta:
        return "delta";
    case LimitQuantity::cesaro_c:
        return "cesaro_c";
    }
    return "?";
}

LimitQuantity parse_limit_quantity(std::string_view text)
{
    for (LimitQuantity q : {LimitQuantity::scaled_lambda, LimitQuantity::scaled_rho,
                            LimitQuantity::delta, LimitQuantity::cesaro_c}) {
        if (to_string(q) == text) {
            return q;
        }
    }
    throw UsageError("unknown limit quantity '" + std::string(text) +
                     "' (expected scaled_lambda, scaled_rho, delta or cesaro_c)");
}

Rational limit_target(LimitQuantity q)
{
    switch (q) {
    case LimitQuantity::scaled_lambda:
        return BoundConstants::lambda_upper();
    case LimitQuantity::scaled_rho:
        return BoundConstants::rho_upper();
    case LimitQuantity::delta:
        return BoundConstants::delta_upper();
    case LimitQuantity::cesaro_c:
        return Rational(1);
    }
    return Rational(0);
}

std::vector<std::pair<std::uint64_t, CertifiedReal>>
limit_scan(LimitQuantity q, const std::vector<std::uint64_t>& n_list, unsigned precision_bits)
{
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1])) {
            throw UsageError("limit scan needs a strictly increasing list of positive n");
        }
    }
    std::vector<std::pair<std::uint64_t, CertifiedReal>> out;
    out.reserve(n_list.size());
    for (const std::uint64_t nv : n_list) {
        const HarmonicIndex n(nv);
        const Rational m = m_of(n).as_rational();
        const LodgeQuantities lq = lodge_from_epsilon(n, epsilon(n, precision_bits).enclosure);
        switch (q) {
        case LimitQuantity::scaled_lambda:
            out.emplace_back(nv, lq.lambda * m.pow(3));
            break;
        case LimitQuantity::scaled_rho:
            out.emplace_back(nv, lq.rho * m.pow(4));
            break;
        case LimitQuantity::delta:
            out.emplace_back(nv, lq.delta);
            break;
        case LimitQuantity::cesaro_c:
            out.emplace_back(nv, lq.cesaro_c);
            break;
        }
    }
    return out;
}

} // namespace harmcert
