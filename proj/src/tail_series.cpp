#include "harmcert/tail_series.hpp"

#include "harmcert/errors.hpp"

#include <algorithm>
#include <sstream>

namespace harmcert {

namespace {

Rational integer(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

Rational power_of_two(int e) { return Rational(2).pow(e); }

// Adds [-bound, bound] to x.
CertifiedReal widen(const CertifiedReal& x, const Rational& bound)
{
    const unsigned bits = x.precision() + 8;
    BigFloat lo = x.lower(bits);
    BigFloat hi = x.upper(bits);
    BigFloat r(radius_bits);
    mpfr_set_q(r.get(), bound.get_mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_sub(lo.get(), lo.get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), r.get(), MPFR_RNDU);
    return CertifiedReal::from_bounds(lo, hi, x.precision());
}

Rational rising_factorial(unsigned s, unsigned count)
{
    mpz_class r = 1;
    for (unsigned i = 0; i < count; ++i) {
        r *= s + i;
    }
    return Rational(r);
}

Rational factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

// scale * sum_{j>J} C(b+j-1, j) K^-2j, bounded geometrically. False while the
// ratio bound is not yet below one.
bool expansion_remainder(unsigned b, unsigned last_j, std::uint64_t cutoff, const Rational& scale,
                         Rational& out)
{
    const Rational k2 = integer(cutoff) * integer(cutoff);
    const Rational r = Rational(static_cast<long>(b + last_j + 1)) /
                       (Rational(static_cast<long>(last_j + 2)) * k2);
    if (r >= Rational(1)) {
        return false;
    }
    const Rational next = Rational(binomial(b + last_j, last_j + 1)) *
                          k2.pow(-static_cast<int>(last_j + 1));
    out = scale * next / (Rational(1) - r);
    return true;
}

constexpr unsigned max_expansion_terms = 4096;

} // namespace

int TailSpec::degree() const
{
    for (int i = static_cast<int>(numerator.size()) - 1; i >= 0; --i) {
        if (!numerator[static_cast<std::size_t>(i)].is_zero()) {
            return i;
        }
    }
    return -1;
}

void TailSpec::validate() const
{
    const int deg = std::max(degree(), 0);
    if (deg + 1 >= static_cast<int>(k_power + 2 * shifted_power)) {
        throw UsageError("tail series " + describe() + " is not summable");
    }
}

Rational TailSpec::term(std::uint64_t k) const
{
    if (k < 2) {
        throw UsageError("tail terms start at k = 2");
    }
    const Rational kk = integer(k);
    Rational p;
    Rational power(1);
    for (const auto& c : numerator) {
        p += c * power;
        power *= kk;
    }
    const Rational den =
        kk.pow(static_cast<int>(k_power)) * (kk * kk - Rational(1)).pow(static_cast<int>(shifted_power));
    return p / den;
}

Rational TailSpec::majorant(std::uint64_t cutoff) const
{
    if (cutoff < 2) {
        throw UsageError("majorant needs a cutoff of at least 2");
    }
    validate();
    const int deg = std::max(degree(), 0);
    Rational total;
    for (const auto& c : numerator) {
        total += c.abs();
    }
    const int s = static_cast<int>(k_power + 2 * shifted_power) - deg;
    return total * Rational(2).pow(deg) /
           (Rational(s - 1) * integer(cutoff - 1).pow(s - 1));
}

std::string TailSpec::describe() const
{
    std::ostringstream os;
    os << "sum_{k>n} (";
    bool first = true;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        if (numerator[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        os << numerator[i].to_string();
        if (i > 0) {
            os << "*k^" << i;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    os << ")/(k^" << k_power << " (k^2-1)^" << shifted_power << ")";
    return os.str();
}

std::uint64_t tail_split_index(HarmonicIndex n) { return std::max<std::uint64_t>(n.value() + 1, 64); }

CertifiedReal power_tail(unsigned s, std::uint64_t start, unsigned precision_bits)
{
    if (s < 2) {
        throw UsageError("power_tail needs an exponent of at least 2");
    }
    if (start < 1) {
        throw UsageError("power_tail starts at k >= 1");
    }
    const unsigned bits = precision_bits + 16;
    std::uint64_t em_start = std::max<std::uint64_t>({start, 2 * static_cast<std::uint64_t>(s) + 16, 64});

    while (true) {
        CertifiedReal sum(bits);
        for (std::uint64_t k = start; k < em_start; ++k) {
            sum += CertifiedReal::from_rational(integer(k).pow(-static_cast<int>(s)), bits);
        }
        const Rational big_n = integer(em_start);
        const Rational leading = big_n.pow(1 - static_cast<int>(s)) / Rational(static_cast<long>(s - 1));
        Rational approx = leading + big_n.pow(-static_cast<int>(s)) / Rational(2);
        const Rational budget = power_of_two(-static_cast<int>(precision_bits) - 10) * leading;
        Rational last;
        bool converged = false;
        for (unsigned i = 1; 2 * i <= max_bernoulli_index; ++i) {
            last = bernoulli(2 * i) / factorial(2 * i) * rising_factorial(s, 2 * i - 1) *
                   big_n.pow(1 - static_cast<int>(s) - static_cast<int>(2 * i));
            approx += last;
            if (Rational(2) * last.abs() <= budget) {
                converged = true;
                break;
            }
        }
        if (converged) {
            sum += CertifiedReal::from_rational(approx, bits);
            return widen(sum, Rational(2) * last.abs()).with_precision(precision_bits);
        }
        em_start *= 2;
    }
}

CertifiedReal tail_rational_sum(HarmonicIndex n, const TailSpec& spec, unsigned precision_bits)
{
    spec.validate();
    const unsigned bits = precision_bits + 32;
    CertifiedReal total(bits);
    const int deg = spec.degree();
    if (deg < 0) {
        return total.with_precision(precision_bits);
    }
    const std::uint64_t split = tail_split_index(n);
    for (std::uint64_t k = n.value() + 1; k < split; ++k) {
        total += CertifiedReal::from_rational(spec.term(k), bits);
    }

    const unsigned a = spec.k_power;
    const unsigned b = spec.shifted_power;
    Rational coeff_abs_sum;
    for (const auto& c : spec.numerator) {
        coeff_abs_sum += c.abs();
    }
    const int s0 = static_cast<int>(a + 2 * b) - deg;
    const Rational scale = Rational(2) * coeff_abs_sum * integer(split).pow(1 - s0);
    const Rational budget = power_of_two(-static_cast<int>(precision_bits) - 8) * scale;

    for (unsigned j = 0; j < max_expansion_terms; ++j) {
        const Rational weight(b == 0 ? mpz_class(1) : binomial(b + j - 1, j));
        for (std::size_t i = 0; i < spec.numerator.size(); ++i) {
            if (spec.numerator[i].is_zero()) {
                continue;
            }
            const unsigned s = a + 2 * b + 2 * j - static_cast<unsigned>(i);
            total += power_tail(s, split, bits) * (weight * spec.numerator[i]);
        }
        if (b == 0) {
            return total.with_precision(precision_bits);
        }
        Rational remainder;
        if (expansion_remainder(b, j, split, scale, remainder) && remainder <= budget) {
            return widen(total, remainder).with_precision(precision_bits);
        }
    }
    throw PrecisionLimitError("tail expansion did not reach the requested precision");
}

CertifiedReal integral_term(std::uint64_t k, unsigned p, unsigned precision_bits)
{
    if (k < 2) {
        throw UsageError("integral terms start at k = 2");
    }
    if (p < 1) {
        throw UsageError("integral power must be positive");
    }
    const unsigned bits = precision_bits + 32;
    const Rational kk = integer(k);
    const Rational inv_k2 = (kk * kk).reciprocal();
    // T_j = C(p+j-1, j) / ((2p+2j+1) k^(2p+2j+1))
    Rational t = kk.pow(-static_cast<int>(2 * p + 1)) / Rational(static_cast<long>(2 * p + 1));
    const Rational budget = power_of_two(-static_cast<int>(precision_bits) - 8) * t;
    CertifiedReal sum(bits);
    for (unsigned j = 0; j < max_expansion_terms; ++j) {
        sum += CertifiedReal::from_rational(t, bits);
        const long pj = static_cast<long>(p + j);
        t *= Rational(pj, static_cast<long>(j + 1)) * Rational(2 * pj + 1, 2 * pj + 3) * inv_k2;
        // t is now T_{j+1}; later ratios are at most r.
        const Rational r = Rational(pj + 1, static_cast<long>(j + 2)) * inv_k2;
        if (r < Rational(1)) {
            const Rational remainder = t / (Rational(1) - r);
            if (remainder <= budget) {
                return widen(sum, remainder).with_precision(precision_bits);
            }
        }
    }
    throw PrecisionLimitError("integral expansion did not reach the requested precision");
}

Rational integral_term_majorant(std::uint64_t k, unsigned p)
{
    const Rational kk = integer(k);
    return (Rational(static_cast<long>(2 * p + 1)) * kk *
            (kk * kk - Rational(1)).pow(static_cast<int>(p)))
        .reciprocal();
}

CertifiedReal tail_integral_sum(HarmonicIndex n, unsigned p, unsigned precision_bits)
{
    if (p < 1 || p > 7) {
        throw UsageError("tail integral power must be in [1, 7]");
    }
    const unsigned bits = precision_bits + 32;
    const std::uint64_t split = tail_split_index(n);
    CertifiedReal total(bits);
    for (std::uint64_t k = n.value() + 1; k < split; ++k) {
        total += integral_term(k, p, bits);
    }
    const Rational scale = Rational(2) * integer(split).pow(-static_cast<int>(2 * p));
    const Rational budget = power_of_two(-static_cast<int>(precision_bits) - 8) * scale;
    for (unsigned j = 0; j < max_expansion_terms; ++j) {
        const Rational weight = Rational(binomial(p + j - 1, j)) /
                                Rational(static_cast<long>(2 * p + 2 * j + 1));
        total += power_tail(2 * p + 2 * j + 1, split, bits) * weight;
        Rational remainder;
        if (expansion_remainder(p, j, split, scale, remainder) && remainder <= budget) {
            return widen(total, remainder).with_precision(precision_bits);
        }
    }
    throw PrecisionLimitError("tail integral expansion did not reach the requested precision");
}

} // namespace harmcert
