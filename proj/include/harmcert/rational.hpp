#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace harmcert {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always held in canonical form: the denominator is positive and shares no
/// factor with the numerator. All arithmetic is exact.
class Rational {
public:
    Rational() = default;
    Rational(long value); // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpz_class& integer);
    explicit Rational(const mpq_class& value);

    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpz_class& numerator() const { return value_.get_num(); }
    [[nodiscard]] const mpz_class& denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& get_mpq() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;
    /// Integer power; negative exponents require a nonzero base.
    [[nodiscard]] Rational pow(int exponent) const;

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& lhs, const Rational& rhs)
    {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpq_class value_;
};

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace harmcert
