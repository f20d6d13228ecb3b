"""Aperiodic autocorrelation, the L4 norm, and merit factors.

For f(z) = sum_j a_j z^j with a_j in {+1, -1}:

    C_u          = sum_{j=0}^{u-1} a_j a_{j+n-u}          (u = 1 .. n-1)
    ||f||_4^4    = n^2 + 2 sum_u C_u^2
    merit factor = n^2 / (2 sum_u C_u^2)

On the unit circle ||f||_2^2 = n, so (||f||_4 / sqrt(n))^4 = 1 + 1/F.
All three quantities are exact integers or rationals; the quadrature
routines exist only as a floating-point cross-check of the combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .seqcore import BinarySequence, GuardrailError

MAX_QUADRATURE_N = 1 << 14


@dataclass(frozen=True)
class AutocorrelationProfile:
    """C_1 .. C_{n-1} for one sequence."""

    n: int
    c: tuple[int, ...]

    @property
    def sum_sq(self) -> int:
        return sum(v * v for v in self.c)


@dataclass(frozen=True)
class L4Report:
    """Exact L4 data for one sequence; merit_factor is None when sum_c_sq = 0."""

    n: int
    sum_c_sq: int
    norm4_fourth: int
    merit_factor: Fraction | None


def autocorrelation(seq: BinarySequence) -> AutocorrelationProfile:
    """Autocorrelation profile via the selected bit-parallel kernel."""
    return AutocorrelationProfile(seq.n, tuple(kernels.acf_profile(seq.bits, seq.n)))


def autocorrelation_reference(seq: BinarySequence) -> AutocorrelationProfile:
    """Literal double-loop evaluation of the definition; the test oracle."""
    a = seq.coefficients()
    n = seq.n
    c = tuple(sum(a[j] * a[j + n - u] for j in range(u)) for u in range(1, n))
    return AutocorrelationProfile(n, c)


def l4_report(seq: BinarySequence) -> L4Report:
    """Exact sum of squared autocorrelations, fourth norm power, merit factor."""
    q = kernels.acf_sum_sq(seq.bits, seq.n)
    norm4 = seq.n * seq.n + 2 * q
    merit = Fraction(seq.n * seq.n, 2 * q) if q else None
    return L4Report(seq.n, q, norm4, merit)


def _unit_circle_values(seq: BinarySequence, nodes: int) -> np.ndarray:
    coeffs = np.asarray(seq.coefficients(), dtype=np.float64)
    return np.fft.fft(coeffs, nodes)


def _quadrature_nodes(seq: BinarySequence, nodes: int | None) -> int:
    if seq.n > MAX_QUADRATURE_N:
        raise GuardrailError(
            f"quadrature is capped at n = {MAX_QUADRATURE_N}, got n = {seq.n}"
        )
    m = 4 * seq.n if nodes is None else nodes
    if m < 2 * (seq.n - 1) + 1:
        raise ValueError(
            f"{m} nodes cannot resolve |f|^4 of trigonometric degree {2 * (seq.n - 1)}"
        )
    return m


def l4_by_quadrature(seq: BinarySequence, nodes: int | None = None) -> float:
    """Mean of |f|^4 over M equispaced unit-circle nodes, default M = 4n.

    |f|^4 is a trigonometric polynomial of degree 2(n-1), so the node
    average equals the integral exactly (up to rounding) once M > 2(n-1);
    the default satisfies that with room to spare.
    """
    m = _quadrature_nodes(seq, nodes)
    vals = _unit_circle_values(seq, m)
    sq = vals.real**2 + vals.imag**2
    return float(np.mean(sq**2))


def l2_by_quadrature(seq: BinarySequence, nodes: int | None = None) -> float:
    """Mean of |f|^2 over the same nodes; equals n up to rounding."""
    m = _quadrature_nodes(seq, nodes)
    vals = _unit_circle_values(seq, m)
    return float(np.mean(vals.real**2 + vals.imag**2))


def merit_factor_text(merit: Fraction | None) -> str | None:
    """Exact 'p/q' rendering with None passed through."""
    if merit is None:
        return None
    return f"{merit.numerator}/{merit.denominator}"


def sequence_record(seq: BinarySequence) -> dict:
    """JSON-ready report for one sequence."""
    profile = autocorrelation(seq)
    report = l4_report(seq)
    return {
        "n": seq.n,
        "seq": str(seq),
        "c": list(profile.c),
        "sum_c_sq": report.sum_c_sq,
        "norm4_fourth": report.norm4_fourth,
        "merit_factor": merit_factor_text(report.merit_factor),
    }
