#include "harmcert/constants.hpp"

#include "harmcert/errors.hpp"
#include "harmcert/harmonic.hpp"

#include <string>

namespace harmcert {

CertifiedReal ln_enclosure(const Rational& x, unsigned precision_bits)
{
    if (x.sign() <= 0) {
        throw DomainError("logarithm of a non-positive number: " + x.to_string());
    }
    if (x == Rational(1)) {
        return CertifiedReal(precision_bits);
    }
    const unsigned bits = precision_bits + 8;
    BigFloat lo(bits);
    BigFloat hi(bits);
    mpfr_set_q(lo.get(), x.get_mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return CertifiedReal::from_bounds(lo, hi, precision_bits);
}

CertifiedReal gamma_constant(unsigned precision_bits)
{
    if (precision_bits > max_gamma_bits) {
        throw PrecisionLimitError("Euler's constant is embedded to 200 digits; " +
                                  std::to_string(precision_bits) + " bits requested, limit " +
                                  std::to_string(max_gamma_bits));
    }
    const std::string digits(euler_gamma_digits);
    const unsigned bits = precision_bits + 8;
    BigFloat lo(bits);
    BigFloat hi(bits);
    mpfr_set_str(lo.get(), digits.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(hi.get(), digits.c_str(), 10, MPFR_RNDU);
    // The digits are truncated: gamma lies in [d, d + 10^-200].
    BigFloat tail(bits);
    mpfr_set_str(tail.get(), "1e-200", 10, MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), tail.get(), MPFR_RNDU);
    return CertifiedReal::from_bounds(lo, hi, precision_bits);
}

CertifiedReal gamma_euler_maclaurin(unsigned precision_bits, std::uint64_t cutoff, unsigned terms)
{
    if (cutoff < 2) {
        throw UsageError("Euler-Maclaurin cutoff must be at least 2");
    }
    if (terms < 1 || 2 * (terms + 1) > max_bernoulli_index) {
        throw UsageError("Euler-Maclaurin term count out of range");
    }
    const unsigned bits = precision_bits + 32;
    BigFloat lo(bits);
    BigFloat hi(bits);
    BigFloat t(bits);
    for (std::uint64_t k = 1; k <= cutoff; ++k) {
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(k), MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(k), MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
    CertifiedReal gamma = CertifiedReal::from_bounds(lo, hi, bits);

    const Rational n(mpz_class(static_cast<unsigned long>(cutoff)));
    gamma -= ln_enclosure(n, bits);
    gamma -= Rational(1, 2) / n;
    for (unsigned j = 1; j <= terms; ++j) {
        gamma += bernoulli(2 * j) / (Rational(static_cast<long>(2 * j)) * n.pow(static_cast<int>(2 * j)));
    }
    const unsigned next = terms + 1;
    const Rational remainder =
        (bernoulli(2 * next) / (Rational(static_cast<long>(2 * next)) * n.pow(static_cast<int>(2 * next))))
            .abs();
    BigFloat rem(radius_bits);
    mpfr_set_q(rem.get(), remainder.get_mpq().get_mpq_t(), MPFR_RNDU);
    BigFloat glo = gamma.lower(bits);
    BigFloat ghi = gamma.upper(bits);
    mpfr_sub(glo.get(), glo.get(), rem.get(), MPFR_RNDD);
    mpfr_add(ghi.get(), ghi.get(), rem.get(), MPFR_RNDU);
    return CertifiedReal::from_bounds(glo, ghi, precision_bits);
}

} // namespace harmcert
