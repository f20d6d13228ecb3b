"""Acceptance suite: one check per release criterion, one verdict line each.

Run with `pytest -s tests/test_acceptance.py` to see the verdict lines as
they are produced.  Every check is deterministic (fixed seeds throughout),
so a green run is reproducible bit for bit.
"""

from __future__ import annotations

import os
from fractions import Fraction

import pytest

from littlewood import (
    ClassSpec,
    Kind,
    check_floor_split_identity,
    check_identity,
    exact_moments,
    iter_class,
    l2_by_quadrature,
    l4_by_quadrature,
    l4_report,
    make_rng,
    mean_formula,
    prop1_quantities,
    sample_uniform,
    variance_formula,
)
from littlewood.closedform import ODD_ONLY_IDENTITIES
from littlewood.moments import convergence_scan, scan_csv
from littlewood.norms import autocorrelation

SCAN_NS = [101, 401, 1601]
SCAN_SAMPLES = 100_000
SCAN_SEED = 42


def verdict(num: int, label: str, failures: list) -> None:
    ok = not failures
    print(f"[criterion {num}] {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} failed: {failures[:5]}"


def theorem_specs(criterion: int) -> list[ClassSpec]:
    if criterion == 1:
        return [ClassSpec(Kind.ALL, n) for n in range(2, 21)]
    if criterion == 2:
        return [ClassSpec(Kind.SKEW_SYMMETRIC, n) for n in range(3, 30, 2)]
    return ([ClassSpec(Kind.RECIPROCAL, n) for n in range(2, 31)]
            + [ClassSpec(Kind.NEGATIVE_RECIPROCAL, n) for n in range(2, 31, 2)])


def check_theorem(specs, anchors, threads=None):
    failures = []
    for spec in specs:
        rep = exact_moments(spec, threads=threads)
        got = (rep.mean, rep.variance)
        if got != (mean_formula(spec), variance_formula(spec)):
            failures.append((str(spec), got))
        want = anchors.get((spec.kind, spec.n))
        if want is not None and got != (Fraction(want[0]), Fraction(want[1])):
            failures.append((str(spec), got, "anchor", want))
    return failures


def test_criterion_1_theorem_1():
    failures = check_theorem(
        theorem_specs(1),
        {(Kind.ALL, 3): (15, 16), (Kind.ALL, 2): (6, 0)},
    )
    verdict(1, "theorem 1 mean/variance, class all, n 2..20", failures)


def test_criterion_2_theorem_2():
    failures = check_theorem(
        theorem_specs(2),
        {(Kind.SKEW_SYMMETRIC, 3): (11, 0), (Kind.SKEW_SYMMETRIC, 5): (37, 64)},
    )
    verdict(2, "theorem 2 mean/variance, class skew, odd n 3..29", failures)


def test_criterion_3_theorem_3():
    failures = check_theorem(
        theorem_specs(3),
        {(Kind.RECIPROCAL, 3): (19, 0), (Kind.RECIPROCAL, 2): (6, 0),
         (Kind.NEGATIVE_RECIPROCAL, 4): (36, 64)},
    )
    verdict(3, "theorem 3 mean/variance, classes reciprocal and "
               "negative-reciprocal, n 2..30", failures)


def test_criterion_4_moment_decomposition():
    failures = []
    for kind in Kind:
        n = 2
        while True:
            if kind is Kind.SKEW_SYMMETRIC and n % 2 == 0:
                n += 1
                continue
            if kind is Kind.NEGATIVE_RECIPROCAL and n % 2 == 1:
                n += 1
                continue
            spec = ClassSpec(kind, n)
            if spec.free_count > 20:
                break
            d = prop1_quantities(spec)
            rep = exact_moments(spec)
            if (d.derived_mean, d.derived_variance) != (rep.mean, rep.variance):
                failures.append((str(spec), "decomposition"))
            if kind is Kind.ALL:
                want_e = Fraction(n * (n - 1), 2)
            elif kind is Kind.SKEW_SYMMETRIC:
                want_e = Fraction(n * n - 3 * n + 2, 2)
            else:
                want_e = Fraction(2 * n * n - 3 * n + n % 2, 2)
            if d.sum_sq_mean != want_e:
                failures.append((str(spec), "intermediate", d.sum_sq_mean))
            n += 1
    verdict(4, "moment decomposition and closed intermediates, "
               "free count <= 20", failures)


def test_criterion_5_identity_suite():
    failures = []
    for ident in range(1, 11):
        ns = range(3, 10_001, 2) if ident in ODD_ONLY_IDENTITIES else range(2, 10_001)
        bad = [n for n in ns if not check_identity(ident, n)]
        if bad:
            failures.append((ident, bad[0]))
    bad_u = [u for u in range(1, 10_001) if not check_floor_split_identity(u)]
    if bad_u:
        failures.append(("floor split", bad_u[0]))
    verdict(5, "ten floor-sum identities for n <= 10^4 plus the floor "
               "split for u <= 10^4", failures)


def test_criterion_6_quadrature_bridge():
    failures = []
    rng = make_rng(1234)
    for k in range(1, 11):
        n = 2 ** k
        spec = ClassSpec(Kind.ALL, n)
        for _ in range(100):
            seq = sample_uniform(spec, rng)
            exact = l4_report(seq).norm4_fourth
            if abs(l4_by_quadrature(seq) - exact) / exact > 1e-9:
                failures.append((n, str(seq), "l4"))
            if abs(l2_by_quadrature(seq) - n) / n > 1e-9:
                failures.append((n, str(seq), "l2"))
    verdict(6, "quadrature bridge, 100 seeded sequences per "
               "n in {2, 4, ..., 1024}, tolerance 1e-9", failures)


def test_criterion_7_structural_invariants():
    failures = []
    for n in range(3, 22, 2):
        for seq in iter_class(ClassSpec(Kind.SKEW_SYMMETRIC, n)):
            c = autocorrelation(seq).c
            if any(c[u - 1] for u in range(2, n, 2)):
                failures.append(("skew even-index zero", n, str(seq)))
    for n in range(2, 21):
        for seq in iter_class(ClassSpec(Kind.RECIPROCAL, n)):
            c = autocorrelation(seq).c
            if any((c[u - 1] - u) % 2 for u in range(1, n)):
                failures.append(("reciprocal parity", n, str(seq)))
    for n in range(2, 21, 2):
        plus = sorted(l4_report(s).norm4_fourth
                      for s in iter_class(ClassSpec(Kind.RECIPROCAL, n)))
        minus = sorted(l4_report(s).norm4_fourth
                       for s in iter_class(ClassSpec(Kind.NEGATIVE_RECIPROCAL, n)))
        if plus != minus:
            failures.append(("involution multiset", n))
    verdict(7, "structural invariants: skew even-index zeros (odd n <= 21), "
               "reciprocal parity (n <= 20), involution multisets (n <= 20)",
            failures)


@pytest.fixture(scope="module")
def scans():
    return {
        kind: convergence_scan(kind, SCAN_NS, SCAN_SAMPLES, seed=SCAN_SEED)
        for kind in (Kind.ALL, Kind.RECIPROCAL)
    }


def test_criterion_8_convergence_regression(scans):
    failures = []
    for kind, limit in ((Kind.ALL, 1.0), (Kind.RECIPROCAL, 0.5)):
        rows = scans[kind]
        gaps = [abs(r.median_merit - limit) for r in rows]
        if not all(a > b for a, b in zip(gaps, gaps[1:])):
            failures.append((kind.value, "median gaps not decreasing", gaps))
        for r in rows:
            want = mean_formula(r.spec) / r.spec.n ** 2
            if abs(r.mean_ratio - float(want)) > 5 * r.se_ratio:
                failures.append((kind.value, r.spec.n, "mean beyond 5 se"))
    verdict(8, f"convergence regression at seed {SCAN_SEED}, "
               f"{SCAN_SAMPLES} samples, n in {SCAN_NS}", failures)


def test_criterion_9_determinism(scans):
    failures = []
    thread_counts = [1, 4, os.cpu_count() or 1]
    for criterion in (1, 2, 3):
        for spec in theorem_specs(criterion):
            runs = [exact_moments(spec, threads=t) for t in thread_counts]
            if len({(r.mean, r.variance, r.samples) for r in runs}) != 1:
                failures.append((str(spec), "thread-dependent moments"))
    for kind, rows in scans.items():
        again = convergence_scan(kind, SCAN_NS, SCAN_SAMPLES, seed=SCAN_SEED,
                                 threads=4)
        if scan_csv(again) != scan_csv(rows):
            failures.append((kind.value, "scan repeat not byte-identical"))
    verdict(9, "determinism: thread counts 1/4/max agree exactly and the "
               "seeded scan repeats byte-identically", failures)
