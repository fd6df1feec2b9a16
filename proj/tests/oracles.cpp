#include "oracles.hpp"

#include <mpfr.h>

#include <vector>

namespace oracle {

using harmcert::Rational;

RationalBracket ln_bracket(const Rational& x, int terms)
{
    const Rational y = (x - Rational(1)) / (x + Rational(1));
    const Rational y2 = y * y;
    Rational power = y;
    Rational sum(0);
    for (int j = 0; j < terms; ++j) {
        sum += power / Rational(2 * j + 1);
        power *= y2;
    }
    // |remaining| <= |y|^(2J+1) / ((2J+1)(1 - y^2))
    const Rational tail = power.abs() / (Rational(2 * terms + 1) * (Rational(1) - y2));
    return {Rational(2) * (sum - tail), Rational(2) * (sum + tail)};
}

Rational decimal(const std::string& text)
{
    const bool negative = !text.empty() && text[0] == '-';
    const std::string body = negative ? text.substr(1) : text;
    const auto dot = body.find('.');
    std::string digits = body;
    long scale = 0;
    if (dot != std::string::npos) {
        digits = body.substr(0, dot) + body.substr(dot + 1);
        scale = static_cast<long>(body.size() - dot - 1);
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    Rational r(num, den);
    return negative ? Rational(0) - r : r;
}

harmcert::CertifiedReal enclose(const Rational& lo, const Rational& hi, unsigned prec)
{
    harmcert::BigFloat l(prec + 8);
    harmcert::BigFloat h(prec + 8);
    mpfr_set_q(l.get(), lo.get_mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.get(), hi.get_mpq().get_mpq_t(), MPFR_RNDU);
    return harmcert::CertifiedReal::from_bounds(l, h, prec);
}

bool within(const harmcert::CertifiedReal& x, const std::string& text, const Rational& tol)
{
    const Rational d = decimal(text);
    return x.certainly_greater_than(d - tol) && x.certainly_less_than(d + tol);
}

Rational harmonic(std::uint64_t n)
{
    Rational h(0);
    for (std::uint64_t k = 1; k <= n; ++k) {
        h += Rational(1, static_cast<long>(k));
    }
    return h;
}

Rational bernoulli(unsigned k)
{
    std::vector<Rational> a(k + 1, Rational(0));
    for (unsigned m = 0; m <= k; ++m) {
        a[m] = Rational(1, static_cast<long>(m + 1));
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
    }
    return a[0];
}

void epsilon_mpfr(mpfr_t out, std::uint64_t n)
{
    const Rational h = harmonic(n);
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(out));
    mpfr_set_q(out, h.get_mpq().get_mpq_t(), MPFR_RNDN);
    mpfr_set_ui(t, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_mul_ui(t, t, static_cast<unsigned long>(n + 1), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_sub(out, out, t, MPFR_RNDN);
    mpfr_const_euler(t, MPFR_RNDN);
    mpfr_sub(out, out, t, MPFR_RNDN);
    mpfr_clear(t);
}

std::string epsilon_decimal(std::uint64_t n, unsigned bits, int digits)
{
    mpfr_t e;
    mpfr_init2(e, bits);
    epsilon_mpfr(e, n);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, e);
    std::string r(s);
    mpfr_free_str(s);
    mpfr_clear(e);
    return r;
}

std::string mpfr_gamma_decimals(int digits)
{
    mpfr_t g;
    mpfr_init2(g, static_cast<mpfr_prec_t>(digits * 3.33) + 64);
    mpfr_const_euler(g, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", digits + 5, g);
    std::string r(s);
    mpfr_free_str(s);
    mpfr_clear(g);
    return r.substr(0, static_cast<std::size_t>(digits) + 2);
}

} // namespace oracle
