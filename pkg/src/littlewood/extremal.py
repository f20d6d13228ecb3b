"""Exhaustive minimization of ||f||_4^4 within a class.

The scan is split into fixed free-index chunks merged in order, so the
result (including the witness list) is identical for every thread count.
Witnesses are reported as canonical forms: the lexicographically smallest
text form over the orbit of negation, reversal, and alternation, an
8-element symmetry set that leaves ||f||_4^4 unchanged.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from ._parallel import default_threads, map_ordered
from .seqcore import BinarySequence, ClassSpec, EnumerationRange, GuardrailError, complete_from_free

SEARCH_CHUNK = 1 << 18
MAX_FREE_SEARCH = 28


@dataclass(frozen=True)
class ExtremalResult:
    """Minimum of ||f||_4^4 over a class with every minimizer, canonicalized."""

    spec: ClassSpec
    min_norm4_fourth: int
    best_merit_factor: Fraction | None
    witnesses: tuple[BinarySequence, ...]   # deduplicated canonical forms, sorted
    witness_count: int                      # minimizers before canonicalization
    wall_time: float = 0.0


def orbit(seq: BinarySequence) -> list[BinarySequence]:
    """The 8 images of seq under negation, reversal, and alternation."""
    out = []
    for rev in (False, True):
        base = seq.reversed() if rev else seq
        for alt in (False, True):
            mid = base.alternated() if alt else base
            out.append(mid)
            out.append(mid.negated())
    return out


def canonical_form(seq: BinarySequence) -> BinarySequence:
    """Lexicographically smallest text form over the orbit."""
    return min(orbit(seq), key=str)


def min_search(spec: ClassSpec, threads: int | None = None) -> ExtremalResult:
    """Exhaustive minimum of ||f||_4^4 with all witnesses."""
    if spec.free_count > MAX_FREE_SEARCH:
        raise GuardrailError(
            f"exhaustive search over {spec} needs {spec.free_count} free "
            f"coefficients; the guardrail is {MAX_FREE_SEARCH}"
        )
    start = time.perf_counter()
    chunks = list(EnumerationRange.whole(spec).chunks(SEARCH_CHUNK))
    args = [(spec.kind.code, spec.n, c.lo, c.hi) for c in chunks]
    parts = map_ordered(kernels.range_min_scan, args, default_threads(threads))
    best = min(q for q, _ in parts)
    indices = [i for q, hits in parts if q == best for i in hits]
    canon = sorted({str(canonical_form(complete_from_free(spec, i))) for i in indices})
    n = spec.n
    return ExtremalResult(
        spec=spec,
        min_norm4_fourth=n * n + 2 * best,
        best_merit_factor=Fraction(n * n, 2 * best) if best else None,
        witnesses=tuple(BinarySequence.from_string(s) for s in canon),
        witness_count=len(indices),
        wall_time=time.perf_counter() - start,
    )


def result_json(result: ExtremalResult) -> dict:
    """JSON-ready form of a search result."""
    merit = result.best_merit_factor
    return {
        "class": result.spec.kind.value,
        "n": result.spec.n,
        "min": result.min_norm4_fourth,
        "best_merit_factor": None if merit is None
        else f"{merit.numerator}/{merit.denominator}",
        "witnesses": [str(w) for w in result.witnesses],
        "witness_count": result.witness_count,
    }
