#pragma once

#include <cstddef>
#include <vector>

#include "harmcert/rational.hpp"

namespace harmcert {

/// Power series in x truncated after x^order, with exact coefficients.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Rational> coefficients, std::size_t order);

    [[nodiscard]] std::size_t order() const { return order_; }
    /// Coefficient of x^i (zero beyond the stored terms).
    [[nodiscard]] Rational operator[](std::size_t i) const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }

    /// Multiplicative inverse; needs a nonzero constant term.
    [[nodiscard]] TruncatedSeries inverse() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> c_;
    std::size_t order_;
};

/// Exact reproduction of the optimal constants from the five-term expansion
/// eps = x/12 - x^2/120 + x^3/630 - x^4/1680 + x^5/2310, x = 1/m.
struct SeriesWitness {
    /// eps - 1/(12m + 6/5) through x^4: {0, 0, 0, 19/25200, -43/84000}.
    std::vector<Rational> lambda;
    /// 1/eps - 12m through x^3: {6/5, -19/175, 13/250, -187969/4042500}.
    std::vector<Rational> capital_lambda;
};

SeriesWitness series_witness();

} // namespace harmcert
