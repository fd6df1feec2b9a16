"""Certified numerics for the expansion of H_n in powers of m = n(n+1)/2."""

from fractions import Fraction

from . import _harmcert
from ._harmcert import (
    DomainError,
    Enclosure,
    PrecisionLimitError,
    Report,
    UsageError,
    certify_corollaries,
    certify_theorem,
    decomposition_check,
    epsilon,
    epsilon_step,
    gamma,
    gamma_euler_maclaurin,
    limit_scan,
    ln,
    lodge_quantities,
    positivity_check,
    ramanujan_approx,
    theta,
    triangular,
    truncation_check,
)

__all__ = [
    "DomainError",
    "Enclosure",
    "PrecisionLimitError",
    "Report",
    "UsageError",
    "bernoulli",
    "certify_corollaries",
    "certify_theorem",
    "decomposition_check",
    "epsilon",
    "epsilon_step",
    "gamma",
    "gamma_euler_maclaurin",
    "harmonic_exact",
    "identity_check",
    "limit_scan",
    "ln",
    "lodge_quantities",
    "positivity_check",
    "ramanujan_approx",
    "series_witness",
    "theta",
    "triangular",
    "truncation_check",
]


def harmonic_exact(n: int) -> Fraction:
    return Fraction(_harmcert.harmonic_exact(n))


def bernoulli(k: int) -> Fraction:
    return Fraction(_harmcert.bernoulli(k))


def identity_check(identity: str, k: int) -> tuple[Fraction, Fraction, bool]:
    lhs, rhs, holds = _harmcert.identity_check(identity, k)
    return Fraction(lhs), Fraction(rhs), holds


def series_witness() -> tuple[list[Fraction], list[Fraction]]:
    lam, cap = _harmcert.series_witness()
    return [Fraction(q) for q in lam], [Fraction(q) for q in cap]
