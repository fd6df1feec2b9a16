#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "harmcert/certified_real.hpp"
#include "harmcert/harmonic.hpp"
#include "harmcert/precision.hpp"
#include "harmcert/rational.hpp"
#include "harmcert/report.hpp"

namespace harmcert {

/// Constants of the refined Lodge approximations.
struct BoundConstants {
    static Rational lambda_upper() { return Rational(19, 25200); }
    static Rational rho_upper() { return Rational(43, 84000); }
    static Rational delta_upper() { return Rational(187969, 4042500); }
    static Rational lodge_shift() { return Rational(6, 5); }
};

/// All quantities derived from eps_n:
///   lambda: H_n = 1/2 ln(2m) + gamma + 1/(12m + 6/5) + lambda
///   rho = 19/(25200 m^3) - lambda
///   capital_lambda: H_n = 1/2 ln(2m) + gamma + 1/(12m + capital_lambda)
///   delta = m^3 (6/5 - 19/(175m) + 13/(250m^2) - capital_lambda)
///   cesaro_c = 12 m eps_n
struct LodgeQuantities {
    HarmonicIndex n;
    CertifiedReal lambda;
    CertifiedReal rho;
    CertifiedReal capital_lambda;
    CertifiedReal delta;
    CertifiedReal cesaro_c;
};

/// Computes the quantities from an eps_n enclosure at the given precision.
/// Throws DomainError if eps_n is not certified positive.
LodgeQuantities lodge_from_epsilon(HarmonicIndex n, const CertifiedReal& eps);

struct LodgeBound {
    std::string_view quantity;
    Rational lo;
    Rational hi;
    CertifiedReal value;
    Verdict verdict = Verdict::unresolved;
};

/// The five open-interval claims, ordered by quantity name.
struct LodgeCertificate {
    HarmonicIndex n;
    std::array<LodgeBound, 5> bounds;
    unsigned bits = 0;
    [[nodiscard]] Verdict verdict() const;
};

/// Open intervals claimed for each quantity at index n.
std::array<std::pair<Rational, Rational>, 5> lodge_intervals(HarmonicIndex n);
/// Quantity names in report order.
inline constexpr std::array<std::string_view, 5> lodge_quantity_names = {
    "capital_lambda", "cesaro_c", "delta", "lambda", "rho"};

/// Certifies every bound, escalating precision until all are settled.
LodgeCertificate lodge_quantities(HarmonicIndex n, const PrecisionPolicy& policy = {});
LodgeCertificate lodge_quantities_from(HarmonicIndex n, const Rational& harmonic,
                                       const PrecisionPolicy& policy = {});

/// Rows for every n in [first, last] and every bound.
CertificationReport certify_corollaries(std::uint64_t first, std::uint64_t last,
                                        const PrecisionPolicy& policy = {}, unsigned threads = 0);

enum class LimitQuantity { scaled_lambda, scaled_rho, delta, cesaro_c };
std::string_view to_string(LimitQuantity q);
LimitQuantity parse_limit_quantity(std::string_view text);
/// m^3 lambda -> 19/25200, m^4 rho -> 43/84000, delta -> 187969/4042500, c -> 1.
Rational limit_target(LimitQuantity q);

/// The scaled sequence at each n of a strictly increasing list.
std::vector<std::pair<std::uint64_t, CertifiedReal>>
limit_scan(LimitQuantity q, const std::vector<std::uint64_t>& n_list, unsigned precision_bits);

} // namespace harmcert
