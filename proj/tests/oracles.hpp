#pragma once

// Reference computations that share no code path with the library beyond
// the exact Rational type.

#include "harmcert/certified_real.hpp"
#include "harmcert/rational.hpp"

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace oracle {

/// [lo, hi] with lo <= ln(x) <= hi, from 2 atanh((x-1)/(x+1)) summed in exact
/// rationals; the tail is bounded by a geometric series. x > 0.
struct RationalBracket {
    harmcert::Rational lo;
    harmcert::Rational hi;
};
RationalBracket ln_bracket(const harmcert::Rational& x, int terms);

/// Exact value of a plain decimal literal such as "0.57721".
harmcert::Rational decimal(const std::string& text);

/// The ball covering [lo, hi].
harmcert::CertifiedReal enclose(const harmcert::Rational& lo, const harmcert::Rational& hi, unsigned prec);

/// True when x lies within tol of the decimal literal.
bool within(const harmcert::CertifiedReal& x, const std::string& text, const harmcert::Rational& tol);

/// H_n by straightforward summation.
harmcert::Rational harmonic(std::uint64_t n);

/// B_k via the Akiyama-Tanigawa algorithm (B_1 = +1/2 convention, irrelevant for even k).
harmcert::Rational bernoulli(unsigned k);

/// eps_n = H_n - 1/2 ln(n(n+1)) - gamma at `bits` using MPFR's own constant
/// and logarithm, returned as a decimal string with `digits` digits.
std::string epsilon_decimal(std::uint64_t n, unsigned bits, int digits);

/// eps_n as a double-checked mpfr value (caller clears).
void epsilon_mpfr(mpfr_t out, std::uint64_t n);

/// Gamma from MPFR, formatted with `digits` decimals after the point.
std::string mpfr_gamma_decimals(int digits);

/// First 60 decimals of gamma, tabulated from an 80-digit computation.
inline constexpr const char* gamma_60 =
    "0.577215664901532860606512090082402431042159335939923598805767";

inline constexpr double epsilon_1 = 0.07621074481849448468;
inline constexpr double epsilon_4 = 0.0082515316548049760092;
inline constexpr double theta_1 = 0.505153864055592955387;
inline constexpr double half_ln2_plus_gamma = 0.923789255181505515315;

} // namespace oracle
