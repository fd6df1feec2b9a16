#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "harmcert/certified_real.hpp"
#include "harmcert/harmonic.hpp"
#include "harmcert/precision.hpp"
#include "harmcert/rational.hpp"
#include "harmcert/report.hpp"

namespace harmcert {

/// eps_n = H_n - 1/2 ln(n(n+1)) - gamma.
struct EpsilonValue {
    HarmonicIndex n;
    CertifiedReal enclosure;
};

/// Enclosure of eps_n with radius at most 2^(8-prec).
EpsilonValue epsilon(HarmonicIndex n, unsigned precision_bits);
/// Same, from a caller-supplied exact H_n (for sequential scans).
EpsilonValue epsilon_from(HarmonicIndex n, const Rational& harmonic, unsigned precision_bits);

/// eps_{n-1} - eps_n = int_0^1 t^2/(n(n^2-t^2)) dt = 1/2 ln((n+1)/(n-1)) - 1/n,
/// for n >= 2.
CertifiedReal epsilon_step(std::uint64_t n, unsigned precision_bits);

/// Scaled remainder of the five-term expansion:
///   Theta_n = 2310 m^5 (eps_n - 1/12m + 1/120m^2 - 1/630m^3 + 1/1680m^4).
struct ThetaCertificate {
    HarmonicIndex n;
    CertifiedReal theta;
    Verdict verdict = Verdict::unresolved; // pass iff 0 < Theta_n < 1 is certified
    unsigned bits = 0;                     // precision that settled the verdict
};

ThetaCertificate theta(HarmonicIndex n, const PrecisionPolicy& policy = {});
ThetaCertificate theta_from(HarmonicIndex n, const Rational& harmonic,
                            const PrecisionPolicy& policy = {});

/// Result of comparing eps_n with the t-term partial sum of the expansion.
struct TruncationCheck {
    HarmonicIndex n;
    unsigned terms;
    CertifiedReal residual; // eps_n - sum_{j<=t} c_j m^-j
    Rational next_term;     // c_{t+1} m^-(t+1)
    Verdict verdict = Verdict::unresolved;
};

/// Passes iff the residual lies strictly between 0 and the next term, which
/// both bounds it by the next term and gives it the next term's sign.
TruncationCheck alternating_truncation_check(HarmonicIndex n, unsigned terms,
                                             const PrecisionPolicy& policy = {});

enum class IdentityId { PF1, PF2, KU3, KU4, KU5, IBP1, IBP2, IBP3, POS_A, POS_B };
std::string_view to_string(IdentityId id);
IdentityId parse_identity(std::string_view text);

/// The partial-fraction and Kummer identities, in audit order.
inline constexpr IdentityId exact_identities[] = {IdentityId::PF1, IdentityId::PF2,
                                                  IdentityId::KU3, IdentityId::KU4,
                                                  IdentityId::KU5};

struct IdentityResult {
    IdentityId id;
    std::uint64_t k;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/// Evaluates both sides of a per-term identity at k >= 2 in exact arithmetic.
/// Only PF1, PF2, KU3, KU4 and KU5 are per-term identities.
IdentityResult identity_check(IdentityId id, std::uint64_t k);

/// One of the integration-by-parts representations of eps_n, evaluated
/// independently of H_n and compared with the direct enclosure.
struct DecompositionResult {
    IdentityId stage;
    CertifiedReal representation;
    CertifiedReal direct;
    bool overlaps = false;
};

/// stage is IBP1, IBP2 or IBP3.
DecompositionResult decomposition_check(HarmonicIndex n, IdentityId stage,
                                        unsigned precision_bits);

struct PositivityResult {
    IdentityId id;
    std::uint64_t n;
    bool holds = false;
    /// False when n lies outside the range where the lemma is claimed
    /// (n < 3 for POS-A, n < 5 for POS-B); the result is informational then.
    bool in_claimed_range = true;
    std::uint64_t checked = 0;          // number of exact comparisons made
    std::uint64_t first_violation = 0;  // k (POS-A) or n (POS-B); 0 if none
};

/// POS-A: 6112/15015 k^-13 - 1024/45045 (k-1)^-15 > 0 for every k in (n, k_limit].
/// POS-B: 1/(2310 m^5) - 4688/(135135 (n - 1/2)^12) > 0 at n (k_limit unused).
PositivityResult positivity_check(IdentityId id, std::uint64_t n, std::uint64_t k_limit = 0);

/// Theta certificates for every n in [first, last] as report rows.
CertificationReport certify_theorem(std::uint64_t first, std::uint64_t last,
                                    const PrecisionPolicy& policy = {}, unsigned threads = 0);

} // namespace harmcert
