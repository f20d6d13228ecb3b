"""Pure-Python kernels over bit-packed coefficient sequences.

A length-n sequence of +-1 coefficients is packed into an n-bit integer
with bit j set exactly when a_j = -1, so free index 0 always decodes to
the all-ones sequence.  The aperiodic autocorrelation at shift u is then

    C_u = u - 2 * popcount((bits ^ (bits >> (n - u))) & (2^u - 1))

because each set bit of the masked xor marks one j with a_j * a_{j+n-u} = -1.

These implementations are the fallback backend; the compiled extension in
_corrfast mirrors the same signatures and must agree bit for bit.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

KIND_ALL = 0
KIND_RECIPROCAL = 1
KIND_NEGATIVE_RECIPROCAL = 2
KIND_SKEW_SYMMETRIC = 3


def free_count(kind: int, n: int) -> int:
    """Number of independent coefficients; the rest follow by symmetry."""
    if kind == KIND_ALL:
        return n
    if kind == KIND_NEGATIVE_RECIPROCAL:
        return n // 2
    return (n + 1) // 2


def _reverse_bits(x: int, width: int) -> int:
    if width <= 0:
        return 0
    return int(format(x, f"0{width}b")[::-1], 2)


def _even_index_mask(width: int) -> int:
    # bits 0, 2, 4, ... below width
    return ((1 << (2 * ((width + 1) // 2))) - 1) // 3


def complete_bits(kind: int, n: int, free: int) -> int:
    """Extend packed free coefficients (low bits) to the full n-bit sequence.

    Mirror rules, with s = n-1-j the partner of index j:
      reciprocal            a_j =  a_s
      negative reciprocal   a_j = -a_s            (n even)
      skew symmetric        a_j = (-1)^(j+m) a_s  (n odd, m = (n-1)/2)
    """
    if kind == KIND_ALL:
        return free
    if kind == KIND_RECIPROCAL:
        h = n // 2
        rev = _reverse_bits(free & ((1 << h) - 1), h)
        return free | (rev << (n - h))
    if kind == KIND_NEGATIVE_RECIPROCAL:
        h = n // 2
        rev = _reverse_bits(free, h)
        return free | ((~rev & ((1 << h) - 1)) << h)
    if kind == KIND_SKEW_SYMMETRIC:
        m = (n - 1) // 2
        rev = _reverse_bits(free & ((1 << m) - 1), m)
        # index m+1+p mirrors index m-1-p; (j+m) is odd exactly when p is even
        return free | ((rev ^ _even_index_mask(m)) << (m + 1))
    raise ValueError(f"unknown kind code {kind}")


def acf_profile(bits: int, n: int) -> list[int]:
    """Aperiodic autocorrelations C_1 .. C_{n-1}."""
    out = []
    for u in range(1, n):
        x = (bits ^ (bits >> (n - u))) & ((1 << u) - 1)
        out.append(u - 2 * x.bit_count())
    return out


def acf_sum_sq(bits: int, n: int) -> int:
    """Sum of C_u^2 over u = 1 .. n-1."""
    total = 0
    for u in range(1, n):
        x = (bits ^ (bits >> (n - u))) & ((1 << u) - 1)
        c = u - 2 * x.bit_count()
        total += c * c
    return total


def range_power_sums(kind: int, n: int, lo: int, hi: int) -> tuple[int, int, int]:
    """Visit free indices [lo, hi); return (count, sum q, sum q^2) of q = acf_sum_sq."""
    q1 = 0
    q2 = 0
    for i in range(lo, hi):
        q = acf_sum_sq(complete_bits(kind, n, i), n)
        q1 += q
        q2 += q * q
    return hi - lo, q1, q2


def range_min_scan(kind: int, n: int, lo: int, hi: int) -> tuple[int, list[int]]:
    """Minimum q = acf_sum_sq over free indices [lo, hi) and every index attaining it."""
    best = -1
    hits: list[int] = []
    for i in range(lo, hi):
        q = acf_sum_sq(complete_bits(kind, n, i), n)
        if best < 0 or q < best:
            best = q
            hits = [i]
        elif q == best:
            hits.append(i)
    return best, hits


def batch_sum_sq(kind: int, n: int, free_words: np.ndarray) -> np.ndarray:
    """q = acf_sum_sq for each row of packed free coefficients (uint64 words)."""
    rows = free_words.shape[0]
    out = np.empty(rows, dtype=np.int64)
    for r in range(rows):
        free = int.from_bytes(free_words[r].tobytes(), "little")
        out[r] = acf_sum_sq(complete_bits(kind, n, free), n)
    return out
