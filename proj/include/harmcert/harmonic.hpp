#pragma once

#include <array>
#include <cstdint>

#include "harmcert/certified_real.hpp"
#include "harmcert/rational.hpp"

namespace harmcert {

/// Index n >= 1 of a harmonic partial sum.
class HarmonicIndex {
public:
    /// Throws UsageError for n == 0.
    explicit HarmonicIndex(std::uint64_t n);
    [[nodiscard]] std::uint64_t value() const { return n_; }
    friend auto operator<=>(HarmonicIndex, HarmonicIndex) = default;

private:
    std::uint64_t n_;
};

/// The triangular number m = n(n+1)/2 belonging to a harmonic index.
class TriangularM {
public:
    [[nodiscard]] std::uint64_t value() const { return m_; }
    [[nodiscard]] Rational as_rational() const;
    friend auto operator<=>(TriangularM, TriangularM) = default;

private:
    friend TriangularM m_of(HarmonicIndex n);
    explicit TriangularM(std::uint64_t m) : m_(m) {}
    std::uint64_t m_;
};

TriangularM m_of(HarmonicIndex n);

/// H_n = 1 + 1/2 + ... + 1/n, exactly.
///
/// Served from a process-wide checkpoint cache; concurrent callers get
/// identical values regardless of interleaving.
Rational harmonic_exact(HarmonicIndex n);

/// Sets the largest n for which checkpoints are retained (default 100000).
/// Values beyond the ceiling are still computed, just not cached.
void set_harmonic_cache_ceiling(std::uint64_t ceiling);

/// Walks H_n, H_{n+1}, ... incrementally. Use for scans over consecutive n.
class HarmonicCursor {
public:
    explicit HarmonicCursor(HarmonicIndex start);
    [[nodiscard]] HarmonicIndex index() const { return HarmonicIndex(n_); }
    [[nodiscard]] const Rational& value() const { return value_; }
    void advance();

private:
    std::uint64_t n_;
    Rational value_;
};

/// Largest Bernoulli index available.
inline constexpr unsigned max_bernoulli_index = 64;

/// Exact B_k for even k in [2, 64], generated from
/// sum_{i=0..k} C(k+1, i) B_i = 0 (so B_1 = -1/2).
Rational bernoulli(unsigned k);

/// Coefficients of m^-1 .. m^-5 in the expansion of H_n in powers of 1/m:
/// +1/12, -1/120, +1/630, -1/1680, +1/2310.
const std::array<Rational, 5>& ramanujan_coefficients();

/// sum_{j=1..terms} c_j m^-j, exactly. terms in [0, 5].
Rational ramanujan_partial_sum(TriangularM m, unsigned terms);

/// Enclosure of 1/2 ln(2m) + gamma + sum_{j=1..terms} c_j m^-j, terms in [0, 5].
/// The m^-5 term enters at full weight.
CertifiedReal ramanujan_approx(HarmonicIndex n, unsigned terms, unsigned precision_bits);

struct EulerApprox {
    CertifiedReal value;
    /// Magnitude of the first omitted term, |B_{2J+2}| / ((2J+2) n^{2J+2}).
    Rational remainder_bound;
};

/// ln n + gamma + 1/(2n) - sum_{j=1..terms} B_2j / (2j n^2j), terms in [0, 31].
EulerApprox euler_approx(HarmonicIndex n, unsigned terms, unsigned precision_bits);

} // namespace harmcert
