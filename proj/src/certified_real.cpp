#include "harmcert/certified_real.hpp"

#include "harmcert/errors.hpp"

#include <algorithm>
#include <array>

namespace harmcert {

BigFloat::BigFloat(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

// Endpoints carry a few guard bits beyond the ball precision.
constexpr unsigned guard_bits = 4;

unsigned endpoint_bits(unsigned p) { return p + guard_bits; }

BigFloat& min_into(BigFloat& acc, const BigFloat& x)
{
    if (mpfr_less_p(x.get(), acc.get())) {
        mpfr_set(acc.get(), x.get(), MPFR_RNDD);
    }
    return acc;
}

BigFloat& max_into(BigFloat& acc, const BigFloat& x)
{
    if (mpfr_greater_p(x.get(), acc.get())) {
        mpfr_set(acc.get(), x.get(), MPFR_RNDU);
    }
    return acc;
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min and max of op over the four endpoint combinations, rounded outward.
std::pair<BigFloat, BigFloat> corner_hull(BinaryOp op, const BigFloat& a_lo, const BigFloat& a_hi,
                                          const BigFloat& b_lo, const BigFloat& b_hi,
                                          unsigned bits)
{
    const std::array<std::pair<const BigFloat*, const BigFloat*>, 4> corners{{
        {&a_lo, &b_lo},
        {&a_lo, &b_hi},
        {&a_hi, &b_lo},
        {&a_hi, &b_hi},
    }};
    BigFloat lo(bits);
    BigFloat hi(bits);
    BigFloat tmp(bits);
    bool first = true;
    for (const auto& [x, y] : corners) {
        op(tmp.get(), x->get(), y->get(), MPFR_RNDD);
        if (first) {
            mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
        } else {
            min_into(lo, tmp);
        }
        op(tmp.get(), x->get(), y->get(), MPFR_RNDU);
        if (first) {
            mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
        } else {
            max_into(hi, tmp);
        }
        first = false;
    }
    return {std::move(lo), std::move(hi)};
}

} // namespace

CertifiedReal::CertifiedReal(unsigned precision_bits)
    : precision_(precision_bits), mid_(precision_bits), rad_(radius_bits)
{
    if (precision_bits < 2) {
        throw UsageError("precision must be at least 2 bits");
    }
}

CertifiedReal CertifiedReal::from_rational(const Rational& value, unsigned precision_bits)
{
    CertifiedReal r(precision_bits);
    const int inexact = mpfr_set_q(r.mid_.get(), value.get_mpq().get_mpq_t(), MPFR_RNDN);
    if (inexact != 0) {
        // |value - mid| <= half an ulp <= 2^(exp - prec)
        mpfr_set_ui_2exp(r.rad_.get(), 1,
                         mpfr_get_exp(r.mid_.get()) - static_cast<mpfr_exp_t>(precision_bits),
                         MPFR_RNDU);
    }
    return r;
}

CertifiedReal CertifiedReal::from_bounds(const BigFloat& lower, const BigFloat& upper,
                                         unsigned precision_bits)
{
    if (mpfr_greater_p(lower.get(), upper.get())) {
        throw DomainError("enclosure bounds out of order");
    }
    CertifiedReal r(precision_bits);
    const mpfr_prec_t sum_bits =
        std::max(lower.precision(), upper.precision()) + 2;
    BigFloat sum(sum_bits);
    mpfr_add(sum.get(), lower.get(), upper.get(), MPFR_RNDN);
    mpfr_div_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
    mpfr_set(r.mid_.get(), sum.get(), MPFR_RNDN);

    BigFloat a(radius_bits);
    BigFloat b(radius_bits);
    mpfr_sub(a.get(), upper.get(), r.mid_.get(), MPFR_RNDU);
    mpfr_sub(b.get(), r.mid_.get(), lower.get(), MPFR_RNDU);
    mpfr_max(r.rad_.get(), a.get(), b.get(), MPFR_RNDU);
    if (mpfr_sgn(r.rad_.get()) < 0) {
        mpfr_set_zero(r.rad_.get(), 1);
    }
    return r;
}

BigFloat CertifiedReal::lower(unsigned bits) const
{
    BigFloat r(bits == 0 ? endpoint_bits(precision_) : bits);
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

BigFloat CertifiedReal::upper(unsigned bits) const
{
    BigFloat r(bits == 0 ? endpoint_bits(precision_) : bits);
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

double CertifiedReal::width_double() const
{
    BigFloat w(radius_bits);
    mpfr_mul_2ui(w.get(), rad_.get(), 1, MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

bool CertifiedReal::is_positive() const { return mpfr_sgn(lower().get()) > 0; }

bool CertifiedReal::is_negative() const { return mpfr_sgn(upper().get()) < 0; }

bool CertifiedReal::contains(const Rational& value) const
{
    const mpq_srcptr q = value.get_mpq().get_mpq_t();
    return mpfr_cmp_q(lower().get(), q) <= 0 && mpfr_cmp_q(upper().get(), q) >= 0;
}

bool CertifiedReal::contains(const CertifiedReal& other) const
{
    // Compare with the inner ball's endpoints rounded inward-safe: other's
    // outward endpoints must sit inside this ball's inward endpoints.
    const unsigned bits = std::max(precision_, other.precision_) + 16;
    BigFloat lo(bits);
    BigFloat hi(bits);
    mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return mpfr_lessequal_p(lo.get(), other.lower(bits).get()) &&
           mpfr_lessequal_p(other.upper(bits).get(), hi.get());
}

bool CertifiedReal::overlaps(const CertifiedReal& other) const
{
    const unsigned bits = std::max(precision_, other.precision_) + 16;
    return mpfr_lessequal_p(lower(bits).get(), other.upper(bits).get()) &&
           mpfr_lessequal_p(other.lower(bits).get(), upper(bits).get());
}

bool CertifiedReal::certainly_less_than(const Rational& bound) const
{
    return mpfr_cmp_q(upper().get(), bound.get_mpq().get_mpq_t()) < 0;
}

bool CertifiedReal::certainly_greater_than(const Rational& bound) const
{
    return mpfr_cmp_q(lower().get(), bound.get_mpq().get_mpq_t()) > 0;
}

CertifiedReal CertifiedReal::with_precision(unsigned precision_bits) const
{
    const unsigned bits = std::max(endpoint_bits(precision_bits), endpoint_bits(precision_));
    return from_bounds(lower(bits), upper(bits), precision_bits);
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& rhs)
{
    const unsigned p = std::max(precision_, rhs.precision_);
    const unsigned bits = endpoint_bits(p);
    BigFloat lo(bits);
    BigFloat hi(bits);
    mpfr_add(lo.get(), lower(bits).get(), rhs.lower(bits).get(), MPFR_RNDD);
    mpfr_add(hi.get(), upper(bits).get(), rhs.upper(bits).get(), MPFR_RNDU);
    *this = from_bounds(lo, hi, p);
    return *this;
}

CertifiedReal& CertifiedReal::operator-=(const CertifiedReal& rhs)
{
    return *this += -rhs;
}

CertifiedReal& CertifiedReal::operator*=(const CertifiedReal& rhs)
{
    const unsigned p = std::max(precision_, rhs.precision_);
    const unsigned bits = endpoint_bits(p);
    auto [lo, hi] =
        corner_hull(&mpfr_mul, lower(bits), upper(bits), rhs.lower(bits), rhs.upper(bits), bits);
    *this = from_bounds(lo, hi, p);
    return *this;
}

CertifiedReal& CertifiedReal::operator/=(const CertifiedReal& rhs)
{
    if (rhs.contains_zero()) {
        throw DomainError("division by an enclosure containing zero");
    }
    const unsigned p = std::max(precision_, rhs.precision_);
    const unsigned bits = endpoint_bits(p);
    auto [lo, hi] =
        corner_hull(&mpfr_div, lower(bits), upper(bits), rhs.lower(bits), rhs.upper(bits), bits);
    *this = from_bounds(lo, hi, p);
    return *this;
}

CertifiedReal& CertifiedReal::operator+=(const Rational& rhs)
{
    const unsigned bits = endpoint_bits(precision_);
    BigFloat lo(bits);
    BigFloat hi(bits);
    const mpq_srcptr q = rhs.get_mpq().get_mpq_t();
    mpfr_add_q(lo.get(), lower(bits).get(), q, MPFR_RNDD);
    mpfr_add_q(hi.get(), upper(bits).get(), q, MPFR_RNDU);
    *this = from_bounds(lo, hi, precision_);
    return *this;
}

CertifiedReal& CertifiedReal::operator-=(const Rational& rhs) { return *this += -rhs; }

CertifiedReal& CertifiedReal::operator*=(const Rational& rhs)
{
    const unsigned bits = endpoint_bits(precision_);
    BigFloat lo(bits);
    BigFloat hi(bits);
    const mpq_srcptr q = rhs.get_mpq().get_mpq_t();
    const bool negative = rhs.sign() < 0;
    mpfr_mul_q(lo.get(), (negative ? upper(bits) : lower(bits)).get(), q, MPFR_RNDD);
    mpfr_mul_q(hi.get(), (negative ? lower(bits) : upper(bits)).get(), q, MPFR_RNDU);
    *this = from_bounds(lo, hi, precision_);
    return *this;
}

CertifiedReal& CertifiedReal::operator/=(const Rational& rhs)
{
    return *this *= rhs.reciprocal();
}

CertifiedReal operator-(const CertifiedReal& x)
{
    CertifiedReal r = x;
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

CertifiedReal operator/(const Rational& lhs, const CertifiedReal& rhs)
{
    return CertifiedReal::from_rational(lhs, rhs.precision() + guard_bits) / rhs;
}

CertifiedReal log(const CertifiedReal& x)
{
    if (!x.is_positive()) {
        throw DomainError("logarithm of an enclosure not strictly positive");
    }
    const unsigned bits = x.precision() + guard_bits;
    BigFloat lo = x.lower(bits);
    BigFloat hi = x.upper(bits);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return CertifiedReal::from_bounds(lo, hi, x.precision());
}

std::string format_decimal(mpfr_srcptr value, int significant_digits, mpfr_rnd_t rounding)
{
    if (mpfr_zero_p(value) != 0) {
        return "0";
    }
    if (mpfr_nan_p(value) != 0 || mpfr_inf_p(value) != 0) {
        throw DomainError("cannot format a non-finite value");
    }
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant_digits), value,
                             rounding);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string out;
    if (digits.front() == '-') {
        out.push_back('-');
        digits.erase(0, 1);
    }
    out.push_back(digits.front());
    if (digits.size() > 1) {
        out.push_back('.');
        out.append(digits, 1);
    }
    const long exponent = static_cast<long>(exp10) - 1;
    out.push_back('e');
    out.push_back(exponent < 0 ? '-' : '+');
    out.append(std::to_string(exponent < 0 ? -exponent : exponent));
    return out;
}

DecimalEnclosure to_decimal(const CertifiedReal& x, int significant_digits)
{
    DecimalEnclosure out;
    out.midpoint = format_decimal(x.midpoint().get(), significant_digits, MPFR_RNDN);

    BigFloat rad(radius_bits);
    mpfr_set(rad.get(), x.radius().get(), MPFR_RNDU);
    if (mpfr_zero_p(x.midpoint().get()) == 0) {
        // Half a unit in the last printed digit, rounded up.
        mpfr_exp_t exp10 = 0;
        char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant_digits),
                                 x.midpoint().get(), MPFR_RNDN);
        mpfr_free_str(raw);
        BigFloat half_ulp(radius_bits);
        mpfr_set_ui(half_ulp.get(), 10, MPFR_RNDN);
        mpfr_pow_si(half_ulp.get(), half_ulp.get(),
                    static_cast<long>(exp10) - significant_digits, MPFR_RNDU);
        mpfr_div_2ui(half_ulp.get(), half_ulp.get(), 1, MPFR_RNDU);
        mpfr_add(rad.get(), rad.get(), half_ulp.get(), MPFR_RNDU);
    }
    out.radius = format_decimal(rad.get(), significant_digits, MPFR_RNDU);
    return out;
}

} // namespace harmcert
