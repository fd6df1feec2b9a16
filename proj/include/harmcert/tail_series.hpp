#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmcert/certified_real.hpp"
#include "harmcert/harmonic.hpp"
#include "harmcert/rational.hpp"

namespace harmcert {

/// The series sum_{k>n} p(k) / (k^a (k^2 - 1)^b).
struct TailSpec {
    /// Coefficients of p in ascending powers of k.
    std::vector<Rational> numerator;
    unsigned k_power = 0;       // a
    unsigned shifted_power = 0; // b

    /// Degree of p; -1 for the zero polynomial.
    [[nodiscard]] int degree() const;
    /// Throws UsageError unless deg(p) + 1 < a + 2b.
    void validate() const;
    /// p(k) / (k^a (k^2 - 1)^b) for k >= 2.
    [[nodiscard]] Rational term(std::uint64_t k) const;
    /// Integral-test majorant of |sum_{k>K} term(k)| for K >= 2:
    /// P 2^deg / ((s - 1)(K - 1)^(s - 1)), s = a + 2b - deg, P = sum |p_i|.
    [[nodiscard]] Rational majorant(std::uint64_t cutoff) const;
    [[nodiscard]] std::string describe() const;
};

/// First index summed by series expansion; terms below it are added directly.
std::uint64_t tail_split_index(HarmonicIndex n);

/// sum_{k >= start} k^-s for s >= 2, via Euler-Maclaurin with a rigorous
/// remainder (at most twice the last included correction).
CertifiedReal power_tail(unsigned s, std::uint64_t start, unsigned precision_bits);

/// Enclosure of sum_{k>n} p(k) / (k^a (k^2 - 1)^b).
///
/// Terms below tail_split_index(n) are summed directly. The rest is expanded
/// as sum_j C(b+j-1, j) p(k) k^-(a+2b+2j), each power summed by power_tail(),
/// and the expansion is cut off with a geometric bound on the omitted j.
CertifiedReal tail_rational_sum(HarmonicIndex n, const TailSpec& spec, unsigned precision_bits);

/// Enclosure of int_0^1 t^{2p} / (k (k^2 - t^2)^p) dt for k >= 2, p >= 1,
/// from the termwise integral of the expansion in (t/k)^2.
CertifiedReal integral_term(std::uint64_t k, unsigned p, unsigned precision_bits);

/// 1 / ((2p+1) k (k^2-1)^p), an upper bound for integral_term(k, p).
Rational integral_term_majorant(std::uint64_t k, unsigned p);

/// Enclosure of sum_{k>n} int_0^1 t^{2p} / (k (k^2 - t^2)^p) dt, p in [1, 7].
CertifiedReal tail_integral_sum(HarmonicIndex n, unsigned p, unsigned precision_bits);

} // namespace harmcert
