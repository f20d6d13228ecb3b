# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring littlewood.kernels.pure.

Same bit convention (bit j set means a_j = -1) and the same signatures at
the package level; agreement with the pure backend is enforced by tests.
Enumeration kernels require n <= 64 so a sequence fits one machine word;
the batch kernel handles arbitrary n via multi-word rows.  Drivers keep
hi - lo below 2^18 so the int64 chunk accumulators cannot overflow for
any n within the enumeration guardrails.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.string cimport memset

import numpy as np

cdef extern from *:
    """
    #include <stdint.h>
    #if defined(__GNUC__) || defined(__clang__)
    static inline uint64_t lw_popcnt(uint64_t x) { return (uint64_t)__builtin_popcountll(x); }
    #else
    static inline uint64_t lw_popcnt(uint64_t x) {
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
        return (x * 0x0101010101010101ULL) >> 56;
    }
    #endif
    """
    uint64_t lw_popcnt(uint64_t x) nogil

BACKEND = "compiled"

cdef enum:
    KIND_ALL = 0
    KIND_RECIPROCAL = 1
    KIND_NEGATIVE_RECIPROCAL = 2
    KIND_SKEW_SYMMETRIC = 3


cdef inline int _free_count(int kind, int n) nogil:
    if kind == KIND_ALL:
        return n
    if kind == KIND_NEGATIVE_RECIPROCAL:
        return n >> 1
    return (n + 1) >> 1


cdef inline uint64_t _complete64(int kind, int n, uint64_t free) nogil:
    # mirror free bits [0, fc) onto [fc, n); sources n-1-j are always below fc
    cdef int fc = _free_count(kind, n)
    cdef int m = (n - 1) >> 1
    cdef int j, s, flip
    cdef uint64_t bits = free
    for j in range(fc, n):
        s = n - 1 - j
        if kind == KIND_RECIPROCAL:
            flip = 0
        elif kind == KIND_NEGATIVE_RECIPROCAL:
            flip = 1
        else:
            flip = (j + m) & 1
        bits |= (((free >> s) & 1ULL) ^ <uint64_t>flip) << j
    return bits


cdef inline int64_t _sumsq64(uint64_t bits, int n) nogil:
    cdef int u
    cdef int64_t c, q = 0
    cdef uint64_t x
    for u in range(1, n):
        x = (bits ^ (bits >> (n - u))) & ((1ULL << u) - 1ULL)
        c = u - 2 * <int64_t>lw_popcnt(x)
        q += c * c
    return q


def range_power_sums(int kind, int n, uint64_t lo, uint64_t hi):
    """Visit free indices [lo, hi); return (count, sum q, sum q^2) of q = acf_sum_sq."""
    if n > 64:
        raise ValueError("compiled enumeration kernel requires n <= 64")
    cdef uint64_t i
    cdef int64_t q, q1 = 0, q2 = 0
    with nogil:
        for i in range(lo, hi):
            q = _sumsq64(_complete64(kind, n, i), n)
            q1 += q
            q2 += q * q
    return hi - lo, q1, q2


def range_min_scan(int kind, int n, uint64_t lo, uint64_t hi):
    """Minimum q over free indices [lo, hi) and every index attaining it."""
    if n > 64:
        raise ValueError("compiled enumeration kernel requires n <= 64")
    cdef uint64_t i
    cdef int64_t q, best = -1
    hits = []
    with nogil:
        for i in range(lo, hi):
            q = _sumsq64(_complete64(kind, n, i), n)
            if best < 0 or q < best:
                best = q
                with gil:
                    hits = [i]
            elif q == best:
                with gil:
                    hits.append(i)
    return best, hits


cdef void _complete_words(int kind, int n, const uint64_t[::1] free_words,
                          uint64_t* seq, int nwords) nogil:
    cdef int fc = _free_count(kind, n)
    cdef int m = (n - 1) >> 1
    cdef int fw = (fc + 63) >> 6
    cdef int j, s, flip
    cdef uint64_t bit
    memset(seq, 0, nwords * sizeof(uint64_t))
    for j in range(fw):
        seq[j] = free_words[j]
    for j in range(fc, n):
        s = n - 1 - j
        if kind == KIND_RECIPROCAL:
            flip = 0
        elif kind == KIND_NEGATIVE_RECIPROCAL:
            flip = 1
        else:
            flip = (j + m) & 1
        bit = ((seq[s >> 6] >> (s & 63)) & 1ULL) ^ <uint64_t>flip
        seq[j >> 6] |= bit << (j & 63)


cdef int64_t _sumsq_words(const uint64_t* seq, int n, int nwords) nogil:
    cdef int u, s, so, sb, w, uw
    cdef int64_t c, q = 0
    cdef uint64_t x, pc
    for s in range(1, n):
        u = n - s
        so = s >> 6
        sb = s & 63
        uw = (u + 63) >> 6
        pc = 0
        for w in range(uw):
            if sb == 0:
                x = seq[w + so]
            else:
                x = seq[w + so] >> sb
                if w + so + 1 < nwords:
                    x |= seq[w + so + 1] << (64 - sb)
            x ^= seq[w]
            if w == uw - 1 and (u & 63) != 0:
                x &= (1ULL << (u & 63)) - 1ULL
            pc += lw_popcnt(x)
        c = u - 2 * <int64_t>pc
        q += c * c
    return q


def batch_sum_sq(int kind, int n, const uint64_t[:, ::1] free_words):
    """q = acf_sum_sq for each row of packed free coefficients (uint64 words)."""
    cdef Py_ssize_t rows = free_words.shape[0]
    cdef int nwords = (n + 63) >> 6
    out = np.empty(rows, dtype=np.int64)
    scratch = np.zeros(nwords, dtype=np.uint64)
    cdef int64_t[::1] ov = out
    cdef uint64_t[::1] sv = scratch
    cdef Py_ssize_t r
    with nogil:
        for r in range(rows):
            _complete_words(kind, n, free_words[r], &sv[0], nwords)
            ov[r] = _sumsq_words(&sv[0], n, nwords)
    return out


def sum_sq_words(const uint64_t[::1] seq_words, int n):
    """Sum of C_u^2 for one full sequence packed into uint64 words."""
    cdef int nwords = (n + 63) >> 6
    cdef int64_t q
    with nogil:
        q = _sumsq_words(&seq_words[0], n, nwords)
    return q


def profile_words(const uint64_t[::1] seq_words, int n):
    """C_1 .. C_{n-1} for one full sequence packed into uint64 words."""
    cdef int nwords = (n + 63) >> 6
    out = np.empty(n - 1, dtype=np.int64)
    cdef int64_t[::1] ov = out
    cdef int u, s, so, sb, w, uw
    cdef uint64_t x, pc
    with nogil:
        for u in range(1, n):
            s = n - u
            so = s >> 6
            sb = s & 63
            uw = (u + 63) >> 6
            pc = 0
            for w in range(uw):
                if sb == 0:
                    x = seq_words[w + so]
                else:
                    x = seq_words[w + so] >> sb
                    if w + so + 1 < nwords:
                        x |= seq_words[w + so + 1] << (64 - sb)
                x ^= seq_words[w]
                if w == uw - 1 and (u & 63) != 0:
                    x &= (1ULL << (u & 63)) - 1ULL
                pc += lw_popcnt(x)
            ov[u - 1] = u - 2 * <int64_t>pc
    return out


def complete_bits64(int kind, int n, uint64_t free):
    """Single-word completion, exposed for backend agreement tests."""
    if n > 64:
        raise ValueError("compiled completion requires n <= 64")
    return _complete64(kind, n, free)
