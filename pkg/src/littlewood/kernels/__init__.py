"""Kernel backend selection.

The compiled extension (_corrfast) is preferred when importable; otherwise
the pure-Python fallback takes over with identical semantics.  Set
LITTLEWOOD_KERNELS=pure or =compiled to force the choice; forcing the
compiled backend raises if the extension is missing.
"""

from __future__ import annotations

import os

import numpy as np

from . import pure
from .pure import (
    KIND_ALL,
    KIND_NEGATIVE_RECIPROCAL,
    KIND_RECIPROCAL,
    KIND_SKEW_SYMMETRIC,
    complete_bits,
    free_count,
)

_forced = os.environ.get("LITTLEWOOD_KERNELS", "").strip().lower()
if _forced not in ("", "pure", "compiled"):
    raise ValueError(f"LITTLEWOOD_KERNELS must be 'pure' or 'compiled', not {_forced!r}")

_fast = None
if _forced != "pure":
    try:
        from . import _corrfast as _fast
    except ImportError:
        if _forced == "compiled":
            raise ImportError(
                "LITTLEWOOD_KERNELS=compiled but the compiled kernel extension "
                "is not importable; rebuild or unset the variable"
            ) from None
        _fast = None


def _to_words(bits: int, n: int) -> np.ndarray:
    nwords = (n + 63) // 64
    return np.frombuffer(bits.to_bytes(nwords * 8, "little"), dtype=np.uint64)


if _fast is not None:
    BACKEND = "compiled"

    def acf_profile(bits: int, n: int) -> list[int]:
        return [int(c) for c in _fast.profile_words(_to_words(bits, n), n)]

    def acf_sum_sq(bits: int, n: int) -> int:
        return int(_fast.sum_sq_words(_to_words(bits, n), n))

    range_power_sums = _fast.range_power_sums
    range_min_scan = _fast.range_min_scan
    batch_sum_sq = _fast.batch_sum_sq
else:
    BACKEND = "pure"
    acf_profile = pure.acf_profile
    acf_sum_sq = pure.acf_sum_sq
    range_power_sums = pure.range_power_sums
    range_min_scan = pure.range_min_scan
    batch_sum_sq = pure.batch_sum_sq
