"""Closed-form moments and the floor-sum identities supporting them.

The mean and variance of ||f||_4^4 over each symmetry class are polynomial
in n up to parity indicators and floor terms.  Everything here is exact:
formulas are evaluated over Fractions with their literal coefficients, and
the summation identities are checked by actually summing the left side.

check_identity ids, with I(u) = 1 for odd u and 0 otherwise:
   1  sum_{u=1}^{n-1} floor(u/2)                        = floor(n/2) floor((n-1)/2)
   2  3 sum floor(u/2) floor((u-2)/2)                   = 2 floor(n/2) ((n-2)/2) ceil((n-4)/2)
   3  sum I(u)                                          = floor(n/2)
   4  2 sum I(u) (u-1)/2                                = floor(n/2) floor((n-2)/2)
   5  3 sum I(u) ((u-1)/2) ((u-3)/2)                    = floor(n/2) floor((n-2)/2) floor((n-4)/2)
   6  2 sum_{u,v} I(u) [u + 2v > 2n]                    = floor(n/2) floor((n-2)/2)
   7  sum_{u=(n+1)/2}^{n-1} I(u) (2u-n-1)/2             = floor((n-1)/4) floor((n-3)/4)   (n odd)
   8  sum_{u,v} I(u) I(v) [2u + v > 2n]                 = floor((n-1)/4) floor((n-3)/4)   (n odd)
   9  sum_{u=ceil((3n+1)/4)}^{n-1} I(u)                 = floor((n-1)/8)                  (n odd)
  10  sum_{u=ceil((2n+1)/3)}^{n-1} I(u)                 = floor(n/6) + [n = 4 mod 6]

u and v range over [1, n-1] unless shown otherwise.  The double sums (ids
6 and 8) are summed literally over u with the admissible v counted as an
exact integer interval; tests cross-check that count against the fully
literal double loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .seqcore import ClassSpec, Kind

ODD_ONLY_IDENTITIES = frozenset({7, 8, 9})


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def identity_lhs(ident: int, n: int) -> int:
    """Left side of identity `ident`, evaluated by summation."""
    _validate_identity(ident, n)
    u = np.arange(1, n, dtype=np.int64)
    odd = u[u % 2 == 1]
    if ident == 1:
        return int(np.sum(u // 2))
    if ident == 2:
        return 3 * int(np.sum((u // 2) * ((u - 2) // 2)))
    if ident == 3:
        return int(odd.size)
    if ident == 4:
        return 2 * int(np.sum((odd - 1) // 2))
    if ident == 5:
        return 3 * int(np.sum(((odd - 1) // 2) * ((odd - 3) // 2)))
    if ident == 6:
        # for each odd u, v runs over [1, n-1] with 2v > 2n - u
        v_count = np.maximum(0, (n - 1) - ((2 * n - odd) // 2))
        return 2 * int(np.sum(v_count))
    if ident == 7:
        top = odd[odd >= (n + 1) // 2]
        return int(np.sum((2 * top - n - 1) // 2))
    if ident == 8:
        # for each odd u, odd v runs over (2n - 2u, n-1]; 2n - 2u + 1 is odd
        lo = np.maximum(2 * n - 2 * odd + 1, 1)
        v_count = np.where(lo <= n - 1, (n - 1 - lo) // 2 + 1, 0)
        return int(np.sum(v_count))
    if ident == 9:
        return int(np.sum(odd >= _ceil_div(3 * n + 1, 4)))
    return int(np.sum(odd >= _ceil_div(2 * n + 1, 3)))


def identity_rhs(ident: int, n: int) -> int:
    """Right side of identity `ident`, the closed floor/ceil product."""
    _validate_identity(ident, n)
    if ident == 1:
        return (n // 2) * ((n - 1) // 2)
    if ident == 2:
        r = 2 * (n // 2) * Fraction(n - 2, 2) * _ceil_div(n - 4, 2)
        return int(r)  # the half-integral middle factor always cancels
    if ident == 3:
        return n // 2
    if ident in (4, 6):
        return (n // 2) * ((n - 2) // 2)
    if ident == 5:
        return (n // 2) * ((n - 2) // 2) * ((n - 4) // 2)
    if ident in (7, 8):
        return ((n - 1) // 4) * ((n - 3) // 4)
    if ident == 9:
        return (n - 1) // 8
    return n // 6 + (1 if n % 6 == 4 else 0)


def check_identity(ident: int, n: int) -> bool:
    """Whether the summed left side equals the closed right side at n."""
    return identity_lhs(ident, n) == identity_rhs(ident, n)


def _validate_identity(ident: int, n: int) -> None:
    if ident not in range(1, 11):
        raise ValueError(f"identity id must be 1..10, got {ident}")
    if n < 2:
        raise ValueError(f"identities are stated for n >= 2, got {n}")
    if ident in ODD_ONLY_IDENTITIES and n % 2 == 0:
        raise ValueError(f"identity {ident} is stated for odd n only, got {n}")


def check_floor_split_identity(u: int) -> bool:
    """floor(u/2) floor((u-1)/2) = floor(u/2) floor((u-2)/2) + I(u) (u-1)/2 for u >= 1."""
    if u < 1:
        raise ValueError(f"stated for u >= 1, got {u}")
    lhs = (u // 2) * ((u - 1) // 2)
    rhs = (u // 2) * ((u - 2) // 2) + (u % 2) * ((u - 1) // 2)
    return lhs == rhs


@dataclass(frozen=True)
class FormulaTerms:
    """Parity indicators and floor terms entering the variance formulas."""

    n: int
    odd: bool
    sign_n: int            # (-1)^n
    sign_half: int         # (-1)^((n-1)/2) for odd n, else 0
    floor_n_6: int         # floor(n/6)
    res6_is_4: bool        # n = 4 mod 6
    floor_n1_4: int        # floor((n-1)/4)
    floor_n1_6: int        # floor((n-1)/6)
    floor_n1_8: int        # floor((n-1)/8)
    floor_n1_12: int       # floor((n-1)/12)

    @classmethod
    def from_n(cls, n: int) -> "FormulaTerms":
        odd = n % 2 == 1
        return cls(
            n=n,
            odd=odd,
            sign_n=-1 if odd else 1,
            sign_half=(-1) ** ((n - 1) // 2) if odd else 0,
            floor_n_6=n // 6,
            res6_is_4=n % 6 == 4,
            floor_n1_4=(n - 1) // 4,
            floor_n1_6=(n - 1) // 6,
            floor_n1_8=(n - 1) // 8,
            floor_n1_12=(n - 1) // 12,
        )


def mean_formula(spec: ClassSpec) -> Fraction:
    """Closed-form mean of ||f||_4^4 over the class."""
    n = spec.n
    if spec.kind is Kind.ALL:
        return Fraction(2 * n * n - n)
    if spec.kind is Kind.SKEW_SYMMETRIC:
        return Fraction(2 * n * n - 3 * n + 2)
    t = FormulaTerms.from_n(n)
    return 3 * n * n - 3 * n + Fraction(1 - t.sign_n, 2)


def variance_formula(spec: ClassSpec) -> Fraction:
    """Closed-form variance of ||f||_4^4 over the class."""
    n = spec.n
    t = FormulaTerms.from_n(n)
    if spec.kind is Kind.ALL:
        return (Fraction(16, 3) * n**3 - 20 * n**2 + Fraction(56, 3) * n
                - 2 + 2 * t.sign_n)
    if spec.kind is Kind.SKEW_SYMMETRIC:
        return (Fraction(32, 3) * n**3 - 88 * n**2 + Fraction(592, 3) * n
                - 512 * t.floor_n1_8 - 512 * t.floor_n1_12
                - 88 + 16 * t.sign_half * (n - 3))
    if t.odd:
        return Fraction(32 * n**3 - 144 * n**2 + 160 * n
                        - 576 * t.floor_n1_4 - 512 * t.floor_n1_6 - 48)
    return Fraction(32 * n**3 - 216 * n**2 + 304 * n
                    + 256 * t.floor_n_6 + 256 * (1 if t.res6_is_4 else 0))


def mean_sum_sq_formula(spec: ClassSpec) -> Fraction:
    """Closed-form mean of sum_u C_u^2, the intermediate behind mean_formula."""
    n = spec.n
    if spec.kind is Kind.ALL:
        return Fraction(n * (n - 1), 2)
    if spec.kind is Kind.SKEW_SYMMETRIC:
        return Fraction(n * n - 3 * n + 2, 2)
    odd = 1 if n % 2 == 1 else 0
    return Fraction(2 * n * n - 3 * n + odd, 2)


def formula_limit_constants(spec: ClassSpec | Kind) -> tuple[int, Fraction]:
    """(c, F_limit): mean/n^2 -> c and the merit-factor limit 1/(c-1)."""
    kind = spec.kind if isinstance(spec, ClassSpec) else spec
    if kind in (Kind.ALL, Kind.SKEW_SYMMETRIC):
        return 2, Fraction(1)
    return 3, Fraction(1, 2)


def formula_table_csv(specs: list[ClassSpec]) -> str:
    """CSV of exact closed-form moments: class,n,mean,variance."""
    lines = ["class,n,mean,variance"]
    for spec in specs:
        mean = mean_formula(spec)
        var = variance_formula(spec)
        assert mean.denominator == 1 and var.denominator == 1, spec
        lines.append(f"{spec.kind.value},{spec.n},{mean.numerator},{var.numerator}")
    return "\n".join(lines) + "\n"
