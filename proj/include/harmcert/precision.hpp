#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "harmcert/certified_real.hpp"
#include "harmcert/rational.hpp"

namespace harmcert {

/// Working-precision schedule: initial_bits, then multiplied by
/// growth_factor while not exceeding max_bits.
struct PrecisionPolicy {
    unsigned initial_bits = 128;
    unsigned max_bits = 4096;
    unsigned growth_factor = 2;

    /// Throws UsageError if the policy is malformed.
    void validate() const;
    /// A policy that tries exactly one precision.
    static PrecisionPolicy fixed(unsigned bits) { return {bits, bits, 2}; }
};

enum class Verdict { pass, fail, unresolved };
std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// Pass iff every verdict passes; any fail dominates unresolved.
Verdict combine(Verdict a, Verdict b);

enum class StrictSign { negative, positive, unresolved };
std::string_view to_string(StrictSign s);

/// A quantity that can be recomputed at any requested precision.
using Recomputable = std::function<CertifiedReal(unsigned precision_bits)>;

struct SignResolution {
    StrictSign sign = StrictSign::unresolved;
    unsigned bits = 0; // last precision attempted
    std::optional<CertifiedReal> enclosure;
};

/// Escalates precision until the enclosure excludes zero. A
/// PrecisionLimitError from the quantity counts as exhaustion, not failure;
/// a DomainError moves on to the next precision.
SignResolution resolve_strict_sign(const Recomputable& quantity, const PrecisionPolicy& policy);

struct IntervalCertificate {
    Verdict verdict = Verdict::unresolved;
    unsigned bits = 0;
    std::optional<CertifiedReal> enclosure;
};

/// Classifies an enclosure against the open interval (lo, hi): pass if
/// strictly inside, fail if strictly outside, unresolved otherwise.
Verdict classify_open_interval(const CertifiedReal& x, const Rational& lo, const Rational& hi);

/// Certifies lo < quantity < hi, escalating precision while unresolved.
IntervalCertificate certify_open_interval(const Recomputable& quantity, const Rational& lo,
                                          const Rational& hi, const PrecisionPolicy& policy);

/// Calls attempt(bits) for each precision of the schedule until it returns
/// true; returns the last precision tried. PrecisionLimitError ends the
/// schedule early, DomainError skips to the next precision.
unsigned escalate(const PrecisionPolicy& policy, const std::function<bool(unsigned)>& attempt);

} // namespace harmcert
