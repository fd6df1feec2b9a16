#include "harmcert/harmonic.hpp"

#include "harmcert/constants.hpp"
#include "harmcert/errors.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace harmcert {

HarmonicIndex::HarmonicIndex(std::uint64_t n) : n_(n)
{
    if (n == 0) {
        throw UsageError("harmonic index must be a positive integer");
    }
}

Rational TriangularM::as_rational() const
{
    return Rational(mpz_class(static_cast<unsigned long>(m_)));
}

TriangularM m_of(HarmonicIndex n)
{
    const std::uint64_t v = n.value();
    if (v > 4'000'000'000ULL) {
        throw UsageError("harmonic index too large for a 64-bit triangular number");
    }
    return TriangularM(v % 2 == 0 ? (v / 2) * (v + 1) : v * ((v + 1) / 2));
}

namespace {

Rational unit_fraction(std::uint64_t k)
{
    return Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(k)));
}

// Checkpoints H_0, H_s, H_2s, ... up to the ceiling. Anything in between is
// re-derived from the nearest checkpoint below.
class HarmonicCache {
public:
    static constexpr std::uint64_t stride = 128;

    static HarmonicCache& instance()
    {
        static HarmonicCache cache;
        return cache;
    }

    void set_ceiling(std::uint64_t ceiling)
    {
        const std::scoped_lock lock(mutex_);
        ceiling_ = ceiling;
        const std::size_t keep = static_cast<std::size_t>(ceiling / stride) + 1;
        if (checkpoints_.size() > keep) {
            checkpoints_.resize(keep);
        }
    }

    Rational value(std::uint64_t n)
    {
        std::uint64_t base = 0;
        Rational h;
        {
            const std::scoped_lock lock(mutex_);
            const std::uint64_t wanted = std::min(n, ceiling_) / stride;
            while (checkpoints_.size() <= wanted) {
                const std::uint64_t from = (checkpoints_.size() - 1) * stride;
                Rational next = checkpoints_.back();
                for (std::uint64_t k = from + 1; k <= from + stride; ++k) {
                    next += unit_fraction(k);
                }
                checkpoints_.push_back(std::move(next));
            }
            base = wanted * stride;
            h = checkpoints_[static_cast<std::size_t>(wanted)];
        }
        for (std::uint64_t k = base + 1; k <= n; ++k) {
            h += unit_fraction(k);
        }
        return h;
    }

private:
    HarmonicCache() : checkpoints_{Rational(0)} {}

    std::mutex mutex_;
    std::uint64_t ceiling_ = 100'000;
    std::vector<Rational> checkpoints_;
};

std::vector<Rational> make_bernoulli_table()
{
    std::vector<Rational> b(max_bernoulli_index + 1);
    b[0] = Rational(1);
    for (unsigned k = 1; k <= max_bernoulli_index; ++k) {
        Rational acc;
        for (unsigned i = 0; i < k; ++i) {
            acc += Rational(binomial(k + 1, i)) * b[i];
        }
        b[k] = -acc / Rational(static_cast<long>(k + 1));
    }
    return b;
}

std::array<Rational, 5> make_ramanujan_coefficients()
{
    std::array<Rational, 5> c{Rational(1, 12), Rational(-1, 120), Rational(1, 630),
                              Rational(-1, 1680), Rational(1, 2310)};
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        if (c[j].sign() == c[j + 1].sign() || c[j].denominator() >= c[j + 1].denominator()) {
            throw std::logic_error("expansion coefficients must alternate and shrink");
        }
    }
    if (c.front().sign() <= 0) {
        throw std::logic_error("leading expansion coefficient must be positive");
    }
    return c;
}

} // namespace

Rational harmonic_exact(HarmonicIndex n) { return HarmonicCache::instance().value(n.value()); }

void set_harmonic_cache_ceiling(std::uint64_t ceiling)
{
    HarmonicCache::instance().set_ceiling(ceiling);
}

HarmonicCursor::HarmonicCursor(HarmonicIndex start)
    : n_(start.value()), value_(harmonic_exact(start))
{
}

void HarmonicCursor::advance()
{
    ++n_;
    value_ += unit_fraction(n_);
}

Rational bernoulli(unsigned k)
{
    if (k < 2 || k > max_bernoulli_index || k % 2 != 0) {
        throw UsageError("bernoulli index must be even and in [2, 64], got " + std::to_string(k));
    }
    static const std::vector<Rational> table = make_bernoulli_table();
    return table[k];
}

const std::array<Rational, 5>& ramanujan_coefficients()
{
    static const std::array<Rational, 5> coefficients = make_ramanujan_coefficients();
    return coefficients;
}

Rational ramanujan_partial_sum(TriangularM m, unsigned terms)
{
    if (terms > 5) {
        throw UsageError("at most five expansion terms are available");
    }
    const Rational inv_m = m.as_rational().reciprocal();
    Rational sum;
    Rational power(1);
    for (unsigned j = 0; j < terms; ++j) {
        power *= inv_m;
        sum += ramanujan_coefficients()[j] * power;
    }
    return sum;
}

CertifiedReal ramanujan_approx(HarmonicIndex n, unsigned terms, unsigned precision_bits)
{
    const TriangularM m = m_of(n);
    const unsigned bits = precision_bits + 8;
    CertifiedReal value = ln_enclosure(Rational(2) * m.as_rational(), bits) * Rational(1, 2);
    value += gamma_constant(bits);
    value += ramanujan_partial_sum(m, terms);
    return value.with_precision(precision_bits);
}

EulerApprox euler_approx(HarmonicIndex n, unsigned terms, unsigned precision_bits)
{
    if (2 * (terms + 1) > max_bernoulli_index) {
        throw UsageError("Euler expansion supports at most 31 Bernoulli terms");
    }
    const Rational nn(mpz_class(static_cast<unsigned long>(n.value())));
    const unsigned bits = precision_bits + 8;
    CertifiedReal value = ln_enclosure(nn, bits);
    value += gamma_constant(bits);
    Rational tail = nn.reciprocal() / Rational(2);
    for (unsigned j = 1; j <= terms; ++j) {
        tail -= bernoulli(2 * j) / (Rational(static_cast<long>(2 * j)) * nn.pow(static_cast<int>(2 * j)));
    }
    value += tail;
    const unsigned next = 2 * (terms + 1);
    Rational bound = (bernoulli(next) / (Rational(static_cast<long>(next)) * nn.pow(static_cast<int>(next)))).abs();
    return {value.with_precision(precision_bits), std::move(bound)};
}

} // namespace harmcert
