"""Independent reference implementations used as test oracles.

Everything here is written directly from the definitions (double loops,
itertools filtering), deliberately ignoring the package's optimized paths.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from littlewood import Kind


def acf_naive(coeffs) -> list[int]:
    """C_u = sum_{j<u} a_j a_{j+n-u}, the literal definition."""
    n = len(coeffs)
    return [sum(coeffs[j] * coeffs[j + n - u] for j in range(u)) for u in range(1, n)]


def norm4_naive(coeffs) -> int:
    n = len(coeffs)
    return n * n + 2 * sum(c * c for c in acf_naive(coeffs))


def satisfies_class(coeffs, kind: Kind) -> bool:
    """The defining symmetry relation, checked coefficient by coefficient."""
    n = len(coeffs)
    if kind is Kind.ALL:
        return True
    if kind is Kind.RECIPROCAL:
        return all(coeffs[j] == coeffs[n - 1 - j] for j in range(n))
    if kind is Kind.NEGATIVE_RECIPROCAL:
        return n % 2 == 0 and all(coeffs[j] == -coeffs[n - 1 - j] for j in range(n))
    m = (n - 1) // 2
    return n % 2 == 1 and all(
        coeffs[j] == (-1) ** (j + m) * coeffs[n - 1 - j] for j in range(n)
    )


def members_filtered(kind: Kind, n: int) -> set[tuple[int, ...]]:
    """All class members found by filtering every +-1 tuple."""
    return {a for a in product((1, -1), repeat=n) if satisfies_class(a, kind)}


def moments_filtered(kind: Kind, n: int) -> tuple[Fraction, Fraction]:
    """Population mean and variance of norm4 over the filtered class."""
    values = [norm4_naive(a) for a in members_filtered(kind, n)]
    mean = Fraction(sum(values), len(values))
    second = Fraction(sum(v * v for v in values), len(values))
    return mean, second - mean * mean
