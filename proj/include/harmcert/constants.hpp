#pragma once

#include <cstdint>
#include <string_view>

#include "harmcert/certified_real.hpp"
#include "harmcert/rational.hpp"

namespace harmcert {

/// Enclosure of ln(x) for rational x > 0.
///
/// The radius is at most 2^(1-prec)|ln x| + 2^(-prec). Throws DomainError for
/// x <= 0.
CertifiedReal ln_enclosure(const Rational& x, unsigned precision_bits);

/// Euler's constant, truncated to 200 decimal places.
inline constexpr std::string_view euler_gamma_digits =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467"
    "093694706329174674951463144724980708248096050401448654283622417399764492353625350"
    "033374293733773767394279259525824709491";

/// Highest precision gamma_constant() can certify from the embedded digits.
inline constexpr unsigned max_gamma_bits = 660;

/// Enclosure of Euler's constant from the embedded digits, radius at most
/// 2^(4-prec). Throws PrecisionLimitError above max_gamma_bits.
CertifiedReal gamma_constant(unsigned precision_bits);

/// Independent enclosure of Euler's constant:
///   gamma = H_N - ln N - 1/(2N) + sum_{j=1..terms} B_2j / (2j N^2j) + R
/// with |R| bounded by the first omitted term. H_N is summed with directed
/// rounding, so no exact harmonic number is formed.
CertifiedReal gamma_euler_maclaurin(unsigned precision_bits = 320,
                                    std::uint64_t cutoff = 1'000'000, unsigned terms = 5);

} // namespace harmcert
