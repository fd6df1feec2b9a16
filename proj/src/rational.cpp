#include "harmcert/rational.hpp"

#include "harmcert/errors.hpp"

#include <cstdlib>

namespace harmcert {

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator))
{
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(const mpq_class& value) : value_(value)
{
    if (value_.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den = 1;
    const auto parse_int = [](const std::string& part, mpz_class& out) {
        if (part.empty() || out.set_str(part, 10) != 0) {
            throw UsageError("malformed rational: '" + part + "'");
        }
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    return Rational(num, den);
}

Rational Rational::abs() const
{
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw DomainError("reciprocal of zero");
    }
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r;
    r.value_ = mpq_class(num, den); // powers of coprime integers stay coprime
    return r;
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x)
{
    Rational r;
    r.value_ = -x.value_;
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace harmcert
