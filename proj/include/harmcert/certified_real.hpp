#pragma once

#include <string>
#include <utility>

#include <mpfr.h>

#include "harmcert/rational.hpp"

namespace harmcert {

/// Owning RAII handle for an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    [[nodiscard]] mpfr_ptr get() { return value_; }
    [[nodiscard]] mpfr_srcptr get() const { return value_; }
    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

private:
    mpfr_t value_;
};

/// Radius precision in bits. Radii only need a few correct leading bits.
inline constexpr mpfr_prec_t radius_bits = 64;

/// A real number known to lie in [midpoint - radius, midpoint + radius].
///
/// Every operation rounds outward, so the exact result of the mathematical
/// expression is always inside the resulting enclosure.
class CertifiedReal {
public:
    /// Exact zero at the given precision.
    explicit CertifiedReal(unsigned precision_bits = 128);

    static CertifiedReal from_rational(const Rational& value, unsigned precision_bits);
    /// Builds the ball covering [lower, upper]; requires lower <= upper.
    static CertifiedReal from_bounds(const BigFloat& lower, const BigFloat& upper,
                                     unsigned precision_bits);

    [[nodiscard]] unsigned precision() const { return precision_; }
    [[nodiscard]] const BigFloat& midpoint() const { return mid_; }
    [[nodiscard]] const BigFloat& radius() const { return rad_; }

    /// Endpoints rounded outward at `bits` (defaults to precision() + 8).
    [[nodiscard]] BigFloat lower(unsigned bits = 0) const;
    [[nodiscard]] BigFloat upper(unsigned bits = 0) const;

    [[nodiscard]] double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
    [[nodiscard]] double radius_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }
    /// Upper bound on the full width (2 * radius).
    [[nodiscard]] double width_double() const;

    [[nodiscard]] bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
    [[nodiscard]] bool is_positive() const;
    [[nodiscard]] bool is_negative() const;
    [[nodiscard]] bool contains_zero() const { return !is_positive() && !is_negative(); }
    [[nodiscard]] bool contains(const Rational& value) const;
    [[nodiscard]] bool contains(const CertifiedReal& other) const;
    [[nodiscard]] bool overlaps(const CertifiedReal& other) const;
    /// True when the whole enclosure lies strictly below / above `bound`.
    [[nodiscard]] bool certainly_less_than(const Rational& bound) const;
    [[nodiscard]] bool certainly_greater_than(const Rational& bound) const;

    /// Re-rounds outward to a different precision.
    [[nodiscard]] CertifiedReal with_precision(unsigned precision_bits) const;

    CertifiedReal& operator+=(const CertifiedReal& rhs);
    CertifiedReal& operator-=(const CertifiedReal& rhs);
    CertifiedReal& operator*=(const CertifiedReal& rhs);
    /// Throws DomainError when the divisor enclosure contains zero.
    CertifiedReal& operator/=(const CertifiedReal& rhs);

    CertifiedReal& operator+=(const Rational& rhs);
    CertifiedReal& operator-=(const Rational& rhs);
    CertifiedReal& operator*=(const Rational& rhs);
    CertifiedReal& operator/=(const Rational& rhs);

    friend CertifiedReal operator-(const CertifiedReal& x);

private:
    unsigned precision_;
    BigFloat mid_;
    BigFloat rad_;
};

template <typename Rhs>
CertifiedReal operator+(CertifiedReal lhs, const Rhs& rhs)
{
    return lhs += rhs;
}
template <typename Rhs>
CertifiedReal operator-(CertifiedReal lhs, const Rhs& rhs)
{
    return lhs -= rhs;
}
template <typename Rhs>
CertifiedReal operator*(CertifiedReal lhs, const Rhs& rhs)
{
    return lhs *= rhs;
}
template <typename Rhs>
CertifiedReal operator/(CertifiedReal lhs, const Rhs& rhs)
{
    return lhs /= rhs;
}
inline CertifiedReal operator+(const Rational& lhs, const CertifiedReal& rhs) { return rhs + lhs; }
inline CertifiedReal operator*(const Rational& lhs, const CertifiedReal& rhs) { return rhs * lhs; }
inline CertifiedReal operator-(const Rational& lhs, const CertifiedReal& rhs) { return -(rhs - lhs); }
CertifiedReal operator/(const Rational& lhs, const CertifiedReal& rhs);

/// Natural logarithm of an enclosure; requires the enclosure to be positive.
CertifiedReal log(const CertifiedReal& x);

/// Decimal rendering with a fixed number of significant digits. The printed
/// radius absorbs the midpoint's decimal rounding, so [mid - rad, mid + rad]
/// read back from the strings still encloses the value.
struct DecimalEnclosure {
    std::string midpoint;
    std::string radius;
};
DecimalEnclosure to_decimal(const CertifiedReal& x, int significant_digits = 40);

/// Scientific decimal string of a BigFloat with the given rounding.
std::string format_decimal(mpfr_srcptr value, int significant_digits, mpfr_rnd_t rounding);

} // namespace harmcert
