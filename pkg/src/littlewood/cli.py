"""Command-line interface.

Commands
  verify-theorems    enumeration vs the closed-form mean/variance formulas
  verify-identities  the floor-sum identities behind the formulas
  sample             Monte Carlo moment estimates for one class and length
  scan               merit-factor distribution summaries across lengths
  search             exhaustive minimum of ||f||_4^4 with witnesses
  crosscheck         exact combinatorics vs unit-circle quadrature
  norm               full report for one sequence given in text form

Exit codes: 0 success (and all checks passed), 1 a verification check
failed, 2 usage error or a size guardrail was exceeded.  Randomized
commands take --seed; without it a fresh seed is generated and printed to
stderr.  Outputs embed the seed and package version; timestamps can be
suppressed with --no-timestamp so identical runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__, closedform, extremal, moments, norms
from ._parallel import THREADS_ENV_VAR
from .kernels import BACKEND
from .seqcore import (
    BinarySequence,
    ClassSpec,
    GuardrailError,
    Kind,
    make_rng,
    sample_uniform,
)

MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by the randomized commands."""

    seed: int
    seed_generated: bool
    threads: int | None
    out: str | None
    timestamp: bool

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seed = getattr(args, "seed", None)
        generated = seed is None
        if generated:
            seed = int.from_bytes(os.urandom(8), "little")
        if not 0 <= seed <= MAX_SEED:
            raise ValueError(f"--seed must fit in 64 bits, got {seed}")
        threads = getattr(args, "threads", None)
        if threads is not None and threads < 1:
            raise ValueError(f"--threads must be positive, got {threads}")
        return cls(seed, generated, threads,
                   getattr(args, "out", None), not getattr(args, "no_timestamp", False))

    def announce_seed(self) -> None:
        if self.seed_generated:
            print(f"generated seed: {self.seed}", file=sys.stderr)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_output(payload: dict, config: RunConfig) -> str:
    body = {"version": __version__, "seed": config.seed}
    if config.timestamp:
        body["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    body.update(payload)
    return json.dumps(body, indent=2) + "\n"


def _csv_header(config: RunConfig, with_seed: bool = False) -> str:
    lines = [f"# version={__version__}"]
    if with_seed:
        lines.append(f"# seed={config.seed}")
    if config.timestamp:
        lines.append("# generated_at=" + time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()))
    return "\n".join(lines) + "\n"


def _kind(token: str) -> Kind:
    try:
        return Kind.from_token(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _valid_lengths(kind: Kind, max_n: int) -> range:
    if kind is Kind.SKEW_SYMMETRIC:
        return range(3, max_n + 1, 2)
    if kind is Kind.NEGATIVE_RECIPROCAL:
        return range(2, max_n + 1, 2)
    return range(2, max_n + 1)


def cmd_verify_theorems(args: argparse.Namespace) -> int:
    kinds = [args.klass] if args.klass else list(Kind)
    if args.max_n < 2:
        raise ValueError(f"--max-n must be at least 2, got {args.max_n}")
    plans: list[ClassSpec] = []
    for kind in kinds:
        for n in _valid_lengths(kind, args.max_n):
            spec = ClassSpec(kind, n)
            if spec.free_count > moments.MAX_FREE_EXACT:
                raise GuardrailError(
                    f"{spec} needs {spec.free_count} free coefficients but the "
                    f"enumeration guardrail is {moments.MAX_FREE_EXACT}; lower "
                    f"--max-n or restrict --class"
                )
            plans.append(spec)
    print(f"littlewood {__version__} verify-theorems backend={BACKEND}")
    failures = 0
    for spec in plans:
        rep = moments.exact_moments(spec, args.threads)
        want_mean = closedform.mean_formula(spec)
        want_var = closedform.variance_formula(spec)
        ok = rep.mean == want_mean and rep.variance == want_var
        failures += 0 if ok else 1
        print(f"{spec.kind.value:21s} n={spec.n:3d} mean={str(rep.mean):>12s} "
              f"variance={str(rep.variance):>16s} {'PASS' if ok else 'FAIL'}")
    total = len(plans)
    print(f"{total - failures}/{total} class/length checks passed")
    return 0 if failures == 0 else 1


def cmd_verify_identities(args: argparse.Namespace) -> int:
    if args.max_n < 2:
        raise ValueError(f"--max-n must be at least 2, got {args.max_n}")
    ids = [args.ident] if args.ident else list(range(1, 11))
    print(f"littlewood {__version__} verify-identities")
    failures = 0
    for ident in ids:
        ns = range(2, args.max_n + 1)
        if ident in closedform.ODD_ONLY_IDENTITIES:
            ns = range(3, args.max_n + 1, 2)
        bad = [n for n in ns if not closedform.check_identity(ident, n)]
        note = "odd n" if ident in closedform.ODD_ONLY_IDENTITIES else "all n"
        ok = not bad
        failures += 0 if ok else 1
        detail = f"first failure n={bad[0]}" if bad else f"n up to {args.max_n}"
        print(f"identity {ident:2d} ({note:5s}) {detail:24s} {'PASS' if ok else 'FAIL'}")
    if not args.ident:
        bad_u = [u for u in range(1, args.max_n + 1)
                 if not closedform.check_floor_split_identity(u)]
        ok = not bad_u
        failures += 0 if ok else 1
        detail = f"first failure u={bad_u[0]}" if bad_u else f"u up to {args.max_n}"
        print(f"floor split  (all u) {detail:24s} {'PASS' if ok else 'FAIL'}")
    return 0 if failures == 0 else 1


def cmd_sample(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    config.announce_seed()
    spec = ClassSpec(args.klass, args.n)
    report = moments.monte_carlo_moments(spec, args.samples, config.seed, config.threads)
    if args.format == "csv":
        text = _csv_header(config) + moments.report_csv([report])
    else:
        text = _json_output(moments.report_json(report), config)
    _write(text, config.out)
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    config.announce_seed()
    ns = _parse_n_list(args.n_list)
    rows = moments.convergence_scan(args.klass, ns, args.samples, config.seed,
                                    config.threads)
    _write(_csv_header(config, with_seed=True) + moments.scan_csv(rows), config.out)
    return 0


def _parse_n_list(text: str) -> list[int]:
    try:
        ns = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"--n-list must be comma-separated integers, got {text!r}")
    if not ns:
        raise ValueError("--n-list is empty")
    return ns


def cmd_search(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    spec = ClassSpec(args.klass, args.n)
    result = extremal.min_search(spec, config.threads)
    payload = extremal.result_json(result)
    body = {"version": __version__, "seed": None}
    if config.timestamp:
        body["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    body.update(payload)
    _write(json.dumps(body, indent=2) + "\n", config.out)
    return 0


def cmd_crosscheck(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    config.announce_seed()
    if args.count < 1:
        raise ValueError(f"--count must be positive, got {args.count}")
    spec = ClassSpec(Kind.ALL, args.n)
    rng = make_rng(config.seed)
    worst_l4 = 0.0
    worst_l2 = 0.0
    for _ in range(args.count):
        seq = sample_uniform(spec, rng)
        exact = norms.l4_report(seq).norm4_fourth
        quad = norms.l4_by_quadrature(seq)
        worst_l4 = max(worst_l4, abs(quad - exact) / exact)
        worst_l2 = max(worst_l2, abs(norms.l2_by_quadrature(seq) - seq.n) / seq.n)
    passed = worst_l4 <= args.tolerance and worst_l2 <= args.tolerance
    payload = {
        "n": args.n,
        "count": args.count,
        "max_rel_err_l4": worst_l4,
        "max_rel_err_l2": worst_l2,
        "tolerance": args.tolerance,
        "pass": passed,
    }
    _write(_json_output(payload, config), config.out)
    return 0 if passed else 1


def cmd_norm(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.sequence == "-" else args.sequence
    seq = BinarySequence.from_string(text)
    config = RunConfig.from_args(args)
    body = {"version": __version__}
    if config.timestamp:
        body["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    body.update(norms.sequence_record(seq))
    _write(json.dumps(body, indent=2) + "\n", config.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="littlewood",
        description="Exact L4 norms, autocorrelations, and merit factors "
                    "of +-1 coefficient sequences.",
    )
    parser.add_argument("--version", action="version",
                        version=f"littlewood {__version__} (kernels: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_threads(p):
        p.add_argument("--threads", type=int, default=None,
                       help=f"worker threads (default: ${THREADS_ENV_VAR} or CPU count)")

    def add_output(p):
        p.add_argument("--out", default=None, help="write output to this file")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp so identical runs are byte-identical")

    p = sub.add_parser("verify-theorems",
                       help="enumerate classes and compare with the closed forms")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--class", dest="klass", type=_kind, default=None,
                   help="restrict to one class (default: all four)")
    add_threads(p)
    p.set_defaults(func=cmd_verify_theorems)

    p = sub.add_parser("verify-identities",
                       help="check the floor-sum identities by direct summation")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--id", dest="ident", type=int, choices=range(1, 11),
                   default=None, help="check a single identity")
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("sample", help="Monte Carlo moment estimates")
    p.add_argument("--class", dest="klass", type=_kind, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_threads(p)
    add_output(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("scan", help="distribution summaries across lengths (CSV)")
    p.add_argument("--class", dest="klass", type=_kind, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated lengths")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    add_threads(p)
    add_output(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("search", help="exhaustive minimum of the fourth norm power")
    p.add_argument("--class", dest="klass", type=_kind, required=True)
    p.add_argument("--n", type=int, required=True)
    add_threads(p)
    add_output(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("crosscheck",
                       help="compare exact norms against unit-circle quadrature")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=1e-9)
    add_output(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("norm", help="report for one sequence ('-' reads stdin)")
    p.add_argument("sequence", help="text form over '+'/'-', a_0 first")
    add_output(p)
    p.set_defaults(func=cmd_norm)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GuardrailError as exc:
        print(f"guardrail: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
