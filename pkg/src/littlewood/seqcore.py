"""Sequences of +-1 coefficients, their symmetry classes, and enumeration.

Conventions, fixed across the whole package:
  * text form writes a_0 first, '+' for +1 and '-' for -1;
  * packed form stores a length-n sequence as an n-bit integer with bit j
    set exactly when a_j = -1, so packed 0 is the all-ones sequence;
  * a class member is determined by its free coefficients a_0 .. a_{k-1},
    packed the same way into a free index in [0, 2^k).

Classes (n >= 2 throughout):
  all                  no constraint, k = n
  reciprocal           a_j = a_{n-1-j}, k = ceil(n/2)
  negative-reciprocal  a_j = -a_{n-1-j}, n even, k = n/2
  skew                 a_j = (-1)^(j+(n-1)/2) a_{n-1-j}, n odd, k = (n+1)/2
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import kernels

MAX_N = 1 << 20
MAX_FREE_ENUMERATION = 40


class GuardrailError(ValueError):
    """A request exceeded a documented size guardrail."""


class Kind(enum.Enum):
    ALL = "all"
    SKEW_SYMMETRIC = "skew"
    RECIPROCAL = "reciprocal"
    NEGATIVE_RECIPROCAL = "negative-reciprocal"

    @property
    def code(self) -> int:
        return _KIND_CODE[self]

    @classmethod
    def from_token(cls, token: str) -> "Kind":
        t = token.strip().lower()
        t = _KIND_ALIASES.get(t, t)
        for kind in cls:
            if kind.value == t:
                return kind
        raise ValueError(f"unknown class {token!r}; expected one of "
                         + ", ".join(k.value for k in cls))


_KIND_CODE = {
    Kind.ALL: kernels.KIND_ALL,
    Kind.RECIPROCAL: kernels.KIND_RECIPROCAL,
    Kind.NEGATIVE_RECIPROCAL: kernels.KIND_NEGATIVE_RECIPROCAL,
    Kind.SKEW_SYMMETRIC: kernels.KIND_SKEW_SYMMETRIC,
}

_KIND_ALIASES = {
    "skew-symmetric": "skew",
    "skewsymmetric": "skew",
    "neg-reciprocal": "negative-reciprocal",
    "negativereciprocal": "negative-reciprocal",
}


@dataclass(frozen=True)
class BinarySequence:
    """A length-n sequence over {+1, -1} in packed form."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 2 <= self.n <= MAX_N:
            raise ValueError(f"sequence length must be in [2, {MAX_N}], got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("packed bits out of range for length")

    @classmethod
    def from_coefficients(cls, coeffs) -> "BinarySequence":
        bits = 0
        n = 0
        for j, a in enumerate(coeffs):
            if a == -1:
                bits |= 1 << j
            elif a != 1:
                raise ValueError(f"coefficient at index {j} is {a!r}, expected +1 or -1")
            n = j + 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        s = text.strip()
        bad = set(s) - {"+", "-"}
        if bad:
            raise ValueError(f"sequence text may contain only '+' and '-', got {sorted(bad)}")
        bits = 0
        for j, ch in enumerate(s):
            if ch == "-":
                bits |= 1 << j
        return cls(len(s), bits)

    def coefficient(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(f"coefficient index {j} out of range for n={self.n}")
        return -1 if (self.bits >> j) & 1 else 1

    def coefficients(self) -> list[int]:
        return [-1 if (self.bits >> j) & 1 else 1 for j in range(self.n)]

    def __str__(self) -> str:
        return "".join("-" if (self.bits >> j) & 1 else "+" for j in range(self.n))

    def __len__(self) -> int:
        return self.n

    def negated(self) -> "BinarySequence":
        """a_j -> -a_j."""
        return BinarySequence(self.n, self.bits ^ ((1 << self.n) - 1))

    def reversed(self) -> "BinarySequence":
        """a_j -> a_{n-1-j}."""
        return BinarySequence(self.n, _reverse_bits(self.bits, self.n))

    def alternated(self) -> "BinarySequence":
        """a_j -> (-1)^j a_j."""
        return BinarySequence(self.n, self.bits ^ _odd_index_mask(self.n))


def _reverse_bits(x: int, width: int) -> int:
    return int(format(x, f"0{width}b")[::-1], 2) if width else 0


def _even_index_mask(width: int) -> int:
    return ((1 << (2 * ((width + 1) // 2))) - 1) // 3


def _odd_index_mask(width: int) -> int:
    return _even_index_mask(width) << 1 & ((1 << width) - 1)


@dataclass(frozen=True)
class ClassSpec:
    """A symmetry class at a fixed length."""

    kind: Kind
    n: int

    def __post_init__(self) -> None:
        if not 2 <= self.n <= MAX_N:
            raise ValueError(f"class length must be in [2, {MAX_N}], got {self.n}")
        if self.kind is Kind.SKEW_SYMMETRIC and self.n % 2 == 0:
            raise ValueError(f"skew class requires odd n, got {self.n}")
        if self.kind is Kind.NEGATIVE_RECIPROCAL and self.n % 2 == 1:
            raise ValueError(f"negative-reciprocal class requires even n, got {self.n}")

    @property
    def free_count(self) -> int:
        return kernels.free_count(self.kind.code, self.n)

    @property
    def class_size(self) -> int:
        return 1 << self.free_count

    def __str__(self) -> str:
        return f"{self.kind.value}(n={self.n})"


def complete_from_free(spec: ClassSpec, free_bits: int) -> BinarySequence:
    """Member of the class whose free coefficients are packed in free_bits."""
    if not 0 <= free_bits < spec.class_size:
        raise ValueError(f"free index {free_bits} out of range for {spec}")
    return BinarySequence(spec.n, kernels.complete_bits(spec.kind.code, spec.n, free_bits))


def is_member(seq: BinarySequence, spec: ClassSpec) -> bool:
    """Whether seq satisfies the class symmetry (lengths must match)."""
    if seq.n != spec.n:
        raise ValueError(f"length mismatch: sequence has n={seq.n}, spec has n={spec.n}")
    if spec.kind is Kind.ALL:
        return True
    rev = _reverse_bits(seq.bits, seq.n)
    if spec.kind is Kind.RECIPROCAL:
        return seq.bits == rev
    if spec.kind is Kind.NEGATIVE_RECIPROCAL:
        return seq.bits == rev ^ ((1 << seq.n) - 1)
    # skew: flip the mirrored bit wherever (j + (n-1)/2) is odd
    m = (seq.n - 1) // 2
    pattern = _odd_index_mask(seq.n) if m % 2 == 0 else _even_index_mask(seq.n)
    return seq.bits == rev ^ pattern


@dataclass(frozen=True)
class EnumerationRange:
    """Free indices [lo, hi) of a class, the unit of enumeration work."""

    spec: ClassSpec
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.spec.free_count > MAX_FREE_ENUMERATION:
            raise GuardrailError(
                f"enumeration over {self.spec} needs {self.spec.free_count} free "
                f"coefficients; the guardrail is {MAX_FREE_ENUMERATION}"
            )
        if not 0 <= self.lo <= self.hi <= self.spec.class_size:
            raise ValueError(f"range [{self.lo}, {self.hi}) invalid for {self.spec}")

    @classmethod
    def whole(cls, spec: ClassSpec) -> "EnumerationRange":
        return cls(spec, 0, spec.class_size)

    def chunks(self, size: int) -> Iterator["EnumerationRange"]:
        """Split into consecutive subranges of at most `size` indices."""
        if size < 1:
            raise ValueError("chunk size must be positive")
        for start in range(self.lo, self.hi, size):
            yield EnumerationRange(self.spec, start, min(start + size, self.hi))


def enumerate_range(erange: EnumerationRange, visit: Callable[[BinarySequence], None]) -> int:
    """Visit each member of the range in ascending free-index order; return the count."""
    spec = erange.spec
    for i in range(erange.lo, erange.hi):
        visit(complete_from_free(spec, i))
    return erange.hi - erange.lo


def iter_class(spec: ClassSpec) -> Iterator[BinarySequence]:
    """All members in ascending free-index order."""
    erange = EnumerationRange.whole(spec)
    for i in range(erange.lo, erange.hi):
        yield complete_from_free(spec, i)


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator keyed by a 64-bit seed."""
    if not 0 <= seed < (1 << 64):
        raise ValueError(f"seed must fit in 64 bits, got {seed}")
    return np.random.Generator(np.random.Philox(key=seed))


def sample_uniform(spec: ClassSpec, rng: np.random.Generator) -> BinarySequence:
    """One member drawn uniformly by filling the free coefficients from rng."""
    k = spec.free_count
    words = rng.integers(0, (1 << 64) - 1, size=(k + 63) // 64,
                         dtype=np.uint64, endpoint=True)
    free = int.from_bytes(words.tobytes(), "little") & ((1 << k) - 1)
    return complete_from_free(spec, free)
