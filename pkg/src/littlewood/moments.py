"""Exact and sampled moments of ||f||_4^4 over a symmetry class.

Three routes to the same two numbers:
  * exact_moments        exhaustive enumeration, population mean/variance
                         as Fractions (the arbiter for formula checks);
  * formula_moments      the closed-form polynomials (see closedform);
  * monte_carlo_moments  uniform sampling with Bessel-corrected variance
                         and standard errors.

prop1_quantities exposes the intermediates E = mean of sum_u C_u^2 and
V = mean of (sum_u C_u^2)^2, from which mean = n^2 + 2E and variance =
4(V - E^2); this decomposition is the bridge between enumeration and the
closed forms and is checked in the acceptance suite.

All enumeration and sampling is chunked deterministically: enumeration in
fixed free-index blocks merged in order, sampling in fixed 4096-row blocks
with one counter-based stream per block (Philox keyed by the seed, jumped
by the block index).  Results are therefore independent of thread count,
and integer accumulation keeps every exact quantity exact.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from ._parallel import default_threads, map_ordered
from .closedform import mean_formula, variance_formula
from .seqcore import ClassSpec, EnumerationRange, GuardrailError, Kind

ENUM_CHUNK = 1 << 18
MC_BLOCK = 4096
MAX_FREE_EXACT = 30
MAX_FREE_PROP1 = 24
MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class MomentReport:
    """Mean/variance of ||f||_4^4 by one method.

    Exact methods carry Fractions and no standard errors; monte_carlo
    carries floats plus standard errors.  samples is the class size for
    enumeration and the draw count for sampling; seed is None unless the
    method is randomized.
    """

    spec: ClassSpec
    method: str
    mean: Fraction | float
    variance: Fraction | float
    samples: int
    seed: int | None = None
    mean_se: float | None = None
    variance_se: float | None = None
    wall_time: float = 0.0


@dataclass(frozen=True)
class PropOneReport:
    """Intermediates of the moment decomposition over one class."""

    spec: ClassSpec
    sum_sq_mean: Fraction           # E: mean of sum_u C_u^2
    sum_sq_second_moment: Fraction  # V: mean of (sum_u C_u^2)^2
    derived_mean: Fraction          # n^2 + 2E
    derived_variance: Fraction      # 4(V - E^2)


def _power_sums(spec: ClassSpec, threads: int) -> tuple[int, int, int]:
    """(count, sum q, sum q^2) over the whole class, q = sum_u C_u^2."""
    chunks = list(EnumerationRange.whole(spec).chunks(ENUM_CHUNK))
    args = [(spec.kind.code, spec.n, c.lo, c.hi) for c in chunks]
    parts = map_ordered(kernels.range_power_sums, args, threads)
    count = q1 = q2 = 0
    for c, a, b in parts:
        count += c
        q1 += a
        q2 += b
    return count, q1, q2


def exact_moments(spec: ClassSpec, threads: int | None = None) -> MomentReport:
    """Population mean and variance of ||f||_4^4 by exhaustive enumeration."""
    if spec.free_count > MAX_FREE_EXACT:
        raise GuardrailError(
            f"exact moments over {spec} need {spec.free_count} free coefficients; "
            f"the guardrail is {MAX_FREE_EXACT}"
        )
    start = time.perf_counter()
    count, q1, q2 = _power_sums(spec, default_threads(threads))
    n = spec.n
    s1 = count * n**2 + 2 * q1
    s2 = count * n**4 + 4 * n**2 * q1 + 4 * q2
    mean = Fraction(s1, count)
    variance = Fraction(s2, count) - mean * mean
    return MomentReport(spec, "enumeration", mean, variance, samples=count,
                        wall_time=time.perf_counter() - start)


def formula_moments(spec: ClassSpec) -> MomentReport:
    """The closed-form mean and variance packaged as a report row.

    Same shape as exact_moments so formula and enumeration rows can sit in
    one table; samples is the class size both describe.
    """
    return MomentReport(spec, "formula", mean_formula(spec),
                        variance_formula(spec), samples=spec.class_size)


def prop1_quantities(spec: ClassSpec, threads: int | None = None) -> PropOneReport:
    """E and V of the decomposition mean = n^2 + 2E, variance = 4(V - E^2)."""
    if spec.free_count > MAX_FREE_PROP1:
        raise GuardrailError(
            f"decomposition over {spec} needs {spec.free_count} free coefficients; "
            f"the guardrail is {MAX_FREE_PROP1}"
        )
    count, q1, q2 = _power_sums(spec, default_threads(threads))
    e = Fraction(q1, count)
    v = Fraction(q2, count)
    return PropOneReport(spec, e, v, spec.n**2 + 2 * e, 4 * (v - e * e))


def _free_word_block(spec: ClassSpec, seed: int, block: int, rows: int,
                     stream_offset: int) -> np.ndarray:
    """Uniform packed free coefficients, one disjoint Philox stream per block."""
    gen = np.random.Generator(np.random.Philox(key=seed).jumped(stream_offset + block))
    nwords = (spec.free_count + 63) // 64
    words = gen.integers(0, (1 << 64) - 1, size=(rows, nwords),
                         dtype=np.uint64, endpoint=True)
    tail = spec.free_count % 64
    if tail:
        words[:, -1] &= (1 << tail) - 1
    return words


def _sample_sum_sq(spec: ClassSpec, samples: int, seed: int, threads: int,
                   stream_offset: int = 0) -> np.ndarray:
    """q = sum_u C_u^2 for `samples` uniform members, int64, deterministic."""
    if samples < 1:
        raise ValueError(f"sample count must be positive, got {samples}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must fit in 64 bits, got {seed}")
    blocks = range((samples + MC_BLOCK - 1) // MC_BLOCK)
    args = []
    for b in blocks:
        rows = min(MC_BLOCK, samples - b * MC_BLOCK)
        args.append((spec, seed, b, rows, stream_offset))

    def one_block(s, sd, b, rows, off):
        words = _free_word_block(s, sd, b, rows, off)
        return kernels.batch_sum_sq(s.kind.code, s.n, words)

    return np.concatenate(map_ordered(one_block, args, threads))


def monte_carlo_moments(spec: ClassSpec, samples: int, seed: int,
                        threads: int | None = None) -> MomentReport:
    """Sample mean and Bessel-corrected variance of ||f||_4^4, with SEs.

    Power sums of q are accumulated as exact Python integers, so the
    estimates are deterministic functions of (spec, samples, seed); the
    variance SE uses the fourth-moment estimator
    se(s^2) = sqrt((m4 - m2^2 (N-3)/(N-1)) / N)
    with m2, m4 the central sample moments.
    """
    start = time.perf_counter()
    qs = _sample_sum_sq(spec, samples, seed, default_threads(threads))
    n, big_n = spec.n, samples
    p1 = p2 = p3 = p4 = 0
    for q in qs.tolist():
        p1 += q
        p2 += q * q
        p3 += q * q * q
        p4 += q * q * q * q
    # power sums of x = n^2 + 2q
    s1 = big_n * n**2 + 2 * p1
    s2 = big_n * n**4 + 4 * n**2 * p1 + 4 * p2
    s3 = big_n * n**6 + 6 * n**4 * p1 + 12 * n**2 * p2 + 8 * p3
    s4 = big_n * n**8 + 8 * n**6 * p1 + 24 * n**4 * p2 + 32 * n**2 * p3 + 16 * p4
    mean = Fraction(s1, big_n)
    m2 = Fraction(s2, big_n) - mean**2
    m4 = (Fraction(s4, big_n) - 4 * mean * Fraction(s3, big_n)
          + 6 * mean**2 * Fraction(s2, big_n) - 3 * mean**4)
    if big_n > 1:
        variance = (Fraction(s2, 1) - Fraction(s1 * s1, big_n)) / (big_n - 1)
        var_of_var = (m4 - m2 * m2 * Fraction(big_n - 3, big_n - 1)) / big_n
        variance_se = math.sqrt(max(float(var_of_var), 0.0))
    else:
        variance = Fraction(0)
        variance_se = float("nan")
    mean_se = math.sqrt(float(variance) / big_n) if big_n > 1 else float("nan")
    return MomentReport(spec, "monte_carlo", float(mean), float(variance),
                        samples=big_n, seed=seed, mean_se=mean_se,
                        variance_se=variance_se,
                        wall_time=time.perf_counter() - start)


@dataclass(frozen=True)
class ScanRow:
    """Distribution summary of one Monte Carlo scan point."""

    spec: ClassSpec
    samples: int
    seed: int
    median_merit: float
    iqr_merit: float
    median_ratio: float      # median of norm4_fourth / n^2
    iqr_ratio: float
    mean_ratio: float
    se_ratio: float


def convergence_scan(kind: Kind, ns: list[int], samples: int, seed: int,
                     threads: int | None = None) -> list[ScanRow]:
    """Merit-factor and norm-ratio summaries across lengths, one seed.

    Each length gets its own disjoint slice of the seed's counter space, so
    rows are independent draws and reproducible regardless of ordering.
    """
    nthreads = default_threads(threads)
    rows = []
    for index, n in enumerate(ns):
        spec = ClassSpec(kind, n)
        qs = _sample_sum_sq(spec, samples, seed, nthreads,
                            stream_offset=(index + 1) << 40)
        q = qs.astype(np.float64)
        merit = (n * n) / (2.0 * q)  # q >= 1 for n >= 2 since C_1 = +-1
        ratio = (n * n + 2.0 * q) / (n * n)
        m_lo, m_med, m_hi = np.percentile(merit, [25.0, 50.0, 75.0])
        r_lo, r_med, r_hi = np.percentile(ratio, [25.0, 50.0, 75.0])
        p1 = int(qs.sum(dtype=np.object_))
        p2 = sum(x * x for x in qs.tolist())
        s1 = samples * n**2 + 2 * p1
        s2 = samples * n**4 + 4 * n**2 * p1 + 4 * p2
        mean_ratio = Fraction(s1, samples) / n**2
        if samples > 1:
            var = (Fraction(s2, 1) - Fraction(s1 * s1, samples)) / (samples - 1)
            se_ratio = math.sqrt(float(var) / samples) / n**2
        else:
            se_ratio = float("nan")
        rows.append(ScanRow(spec, samples, seed,
                            float(m_med), float(m_hi - m_lo),
                            float(r_med), float(r_hi - r_lo),
                            float(mean_ratio), se_ratio))
    return rows


def scan_csv(rows: list[ScanRow]) -> str:
    """CSV of scan rows for plotting."""
    lines = ["class,n,samples,seed,median_merit_factor,iqr_merit_factor,"
             "median_norm_ratio,iqr_norm_ratio,mean_norm_ratio,se_norm_ratio"]
    for r in rows:
        lines.append(f"{r.spec.kind.value},{r.spec.n},{r.samples},{r.seed},"
                     f"{r.median_merit!r},{r.iqr_merit!r},{r.median_ratio!r},"
                     f"{r.iqr_ratio!r},{r.mean_ratio!r},{r.se_ratio!r}")
    return "\n".join(lines) + "\n"


def _as_ratio(value: Fraction | float) -> tuple[int, int]:
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    return value.as_integer_ratio()


def report_csv(reports: list[MomentReport]) -> str:
    """CSV of moment reports; exact values keep exact numerators/denominators."""
    lines = ["class,n,method,mean_num,mean_den,var_num,var_den,samples,seed"]
    for r in reports:
        mn, md = _as_ratio(r.mean)
        vn, vd = _as_ratio(r.variance)
        seed = "" if r.seed is None else r.seed
        lines.append(f"{r.spec.kind.value},{r.spec.n},{r.method},"
                     f"{mn},{md},{vn},{vd},{r.samples},{seed}")
    return "\n".join(lines) + "\n"


def report_json(report: MomentReport) -> dict:
    """JSON mirror of one report row, same fields as the CSV."""
    mn, md = _as_ratio(report.mean)
    vn, vd = _as_ratio(report.variance)
    out = {
        "class": report.spec.kind.value,
        "n": report.spec.n,
        "method": report.method,
        "mean_num": mn,
        "mean_den": md,
        "var_num": vn,
        "var_den": vd,
        "samples": report.samples,
        "seed": report.seed,
    }
    if report.mean_se is not None:
        out["mean_se"] = report.mean_se
        out["variance_se"] = report.variance_se
    return out
