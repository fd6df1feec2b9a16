#include "harmcert/precision.hpp"

#include "harmcert/errors.hpp"

#include <string>

namespace harmcert {

void PrecisionPolicy::validate() const
{
    if (initial_bits < 2) {
        throw UsageError("initial precision must be at least 2 bits");
    }
    if (initial_bits > max_bits) {
        throw UsageError("initial precision " + std::to_string(initial_bits) +
                         " exceeds maximum " + std::to_string(max_bits));
    }
    if (growth_factor < 2) {
        throw UsageError("precision growth factor must be at least 2");
    }
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::unresolved:
        return "unresolved";
    }
    return "unresolved";
}

Verdict parse_verdict(std::string_view text)
{
    if (text == "pass") {
        return Verdict::pass;
    }
    if (text == "fail") {
        return Verdict::fail;
    }
    if (text == "unresolved") {
        return Verdict::unresolved;
    }
    throw UsageError("unknown verdict '" + std::string(text) + "'");
}

Verdict combine(Verdict a, Verdict b)
{
    if (a == Verdict::fail || b == Verdict::fail) {
        return Verdict::fail;
    }
    if (a == Verdict::unresolved || b == Verdict::unresolved) {
        return Verdict::unresolved;
    }
    return Verdict::pass;
}

std::string_view to_string(StrictSign s)
{
    switch (s) {
    case StrictSign::negative:
        return "negative";
    case StrictSign::positive:
        return "positive";
    case StrictSign::unresolved:
        return "unresolved";
    }
    return "unresolved";
}

unsigned escalate(const PrecisionPolicy& policy, const std::function<bool(unsigned)>& attempt)
{
    policy.validate();
    unsigned bits = policy.initial_bits;
    unsigned last = bits;
    while (true) {
        last = bits;
        try {
            if (attempt(bits)) {
                return last;
            }
        } catch (const PrecisionLimitError&) {
            return last;
        } catch (const DomainError&) {
            // e.g. a divisor enclosure still straddles zero; retry wider
        }
        if (bits >= policy.max_bits) {
            return last;
        }
        const unsigned long next = static_cast<unsigned long>(bits) * policy.growth_factor;
        bits = next > policy.max_bits ? policy.max_bits : static_cast<unsigned>(next);
    }
}

SignResolution resolve_strict_sign(const Recomputable& quantity, const PrecisionPolicy& policy)
{
    SignResolution out;
    out.bits = escalate(policy, [&](unsigned bits) {
        CertifiedReal x = quantity(bits);
        if (x.is_positive()) {
            out.sign = StrictSign::positive;
        } else if (x.is_negative()) {
            out.sign = StrictSign::negative;
        }
        out.enclosure = std::move(x);
        return out.sign != StrictSign::unresolved;
    });
    return out;
}

Verdict classify_open_interval(const CertifiedReal& x, const Rational& lo, const Rational& hi)
{
    if (x.certainly_greater_than(lo) && x.certainly_less_than(hi)) {
        return Verdict::pass;
    }
    // Outside the open interval includes sitting exactly on an endpoint.
    const BigFloat upper = x.upper();
    const BigFloat lower = x.lower();
    if (mpfr_cmp_q(upper.get(), lo.get_mpq().get_mpq_t()) <= 0 ||
        mpfr_cmp_q(lower.get(), hi.get_mpq().get_mpq_t()) >= 0) {
        return Verdict::fail;
    }
    return Verdict::unresolved;
}

IntervalCertificate certify_open_interval(const Recomputable& quantity, const Rational& lo,
                                          const Rational& hi, const PrecisionPolicy& policy)
{
    IntervalCertificate out;
    out.bits = escalate(policy, [&](unsigned bits) {
        CertifiedReal x = quantity(bits);
        out.verdict = classify_open_interval(x, lo, hi);
        out.enclosure = std::move(x);
        return out.verdict != Verdict::unresolved;
    });
    return out;
}

} // namespace harmcert
