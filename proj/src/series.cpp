#include "harmcert/series.hpp"

#include "harmcert/errors.hpp"
#include "harmcert/harmonic.hpp"

#include <algorithm>

namespace harmcert {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t order)
    : c_(std::move(coefficients)), order_(order)
{
    c_.resize(order_ + 1);
}

Rational TruncatedSeries::operator[](std::size_t i) const
{
    return i < c_.size() ? c_[i] : Rational(0);
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (c_.front().is_zero()) {
        throw DomainError("series with zero constant term has no inverse");
    }
    std::vector<Rational> inv(order_ + 1);
    inv[0] = c_[0].reciprocal();
    for (std::size_t k = 1; k <= order_; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += c_[i] * inv[k - i];
        }
        inv[k] = -acc * inv[0];
    }
    return TruncatedSeries(std::move(inv), order_);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        c[i] = a[i] + b[i];
    }
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        c[i] = a[i] - b[i];
    }
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        for (std::size_t j = 0; i + j <= order; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c), order);
}

SeriesWitness series_witness()
{
    const auto& coeff = ramanujan_coefficients();
    // eps = x * F(x), F = sum_j c_{j+1} x^j, known through x^4.
    const TruncatedSeries f({coeff[0], coeff[1], coeff[2], coeff[3], coeff[4]}, 4);

    // 1/(12m + 6/5) = x / (12 + 6x/5)
    const TruncatedSeries lodge_denominator({Rational(12), Rational(6, 5)}, 4);
    const TruncatedSeries lambda_over_x = f - lodge_denominator.inverse();

    SeriesWitness w;
    w.lambda.push_back(Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
        w.lambda.push_back(lambda_over_x[i]);
    }

    // 1/eps = (1/x) / F; dropping the 12/x pole leaves (1/F - 12)/x.
    const TruncatedSeries inv_f = f.inverse();
    if (inv_f[0] != Rational(12)) {
        throw std::logic_error("leading coefficient of 1/eps must be 12m");
    }
    for (std::size_t i = 1; i <= 4; ++i) {
        w.capital_lambda.push_back(inv_f[i]);
    }
    return w;
}

} // namespace harmcert
