"""Command-line entry point.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 size limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path
from typing import Sequence

from . import coefficients as co
from . import experiments, oracle, pd
from .characters import SizeLimitError
from .simplex import InvalidMassError, reorder

FORMAT_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
EXACT_N_RANGE = (2, 6)
EXACT_MAX_DEGREE = 42


def _num(x: float):
    return x if math.isfinite(x) else None


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x) if math.isfinite(x) else ""
    return str(x)


def write_outputs(path: Path, command: str, config: dict, columns: Sequence[str], rows: list[list], payload: dict) -> None:
    """Write ``path`` as CSV (``#`` header lines) and its ``.json`` twin."""
    csv_path = path if path.suffix == ".csv" else path.with_suffix(".csv")
    json_path = csv_path.with_suffix(".json")
    buf = io.StringIO()
    buf.write(f"# splitmerge {command} format v{FORMAT_VERSION}\n")
    buf.write("# config: " + " ".join(f"{k}={v}" for k, v in config.items()) + "\n")
    buf.write("# columns: " + ",".join(columns) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    csv_path.write_text(buf.getvalue(), encoding="utf-8")
    doc = {"command": command, "format_version": FORMAT_VERSION, "config": config, **payload}
    json_path.write_text(json.dumps(doc, indent=2, allow_nan=False) + "\n", encoding="utf-8")


def _parse_masses(values: Sequence[str]) -> tuple[float, ...]:
    out = []
    for v in values:
        out.extend(float(t) for t in v.split(",") if t.strip())
    return tuple(out)


def cmd_simulate(args) -> int:
    try:
        x0 = reorder(_parse_masses(args.init))
    except (InvalidMassError, ValueError) as exc:
        print(f"error: bad --init: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.steps < 0 or args.replicas < 1:
        print("error: need --steps >= 0 and --replicas >= 1", file=sys.stderr)
        return EXIT_USAGE
    summaries = experiments.simulate(x0.parts, args.steps, args.replicas, args.seed, progress=not args.quiet)
    columns = ["q", "mean_sum_squares", "stderr_sum_squares", "mean_x1", "stderr_x1", "mean_parts", "exact_sum_squares"]
    from_point_mass = len(x0) == 1
    rows = []
    for s in summaries:
        exact = 0.5 + 1.0 / (s.q + 2) if from_point_mass else ""
        rows.append([s.q, s.sum_squares.mean, s.sum_squares.stderr, s.largest.mean, s.largest.stderr, s.parts.mean, exact])
    config = {"init": list(x0.parts), "steps": args.steps, "replicas": args.replicas, "seed": args.seed}
    payload = {"rows": [
        {c: (_num(v) if isinstance(v, float) else (None if v == "" else v)) for c, v in zip(columns, row)}
        for row in rows
    ], "pd1_reference_sum_squares": 0.5}
    write_outputs(Path(args.out), "simulate", config, columns, rows, payload)
    return EXIT_OK


def cmd_pd_reference(args) -> int:
    if args.replicas < 1 or not 0 < args.tol < 1:
        print("error: need --replicas >= 1 and 0 < --tol < 1", file=sys.stderr)
        return EXIT_USAGE
    ref = experiments.pd_reference(args.replicas, args.seed, args.tol, args.bins, progress=not args.quiet)
    columns = ["quantity", "lo", "hi", "value", "stderr"]
    moments = [("mean_x1", ref.largest), ("mean_sum_squares", ref.sum_squares),
               ("mean_sum_cubes", ref.sum_cubes), ("mean_parts", ref.parts)]
    rows = [[name, "", "", est.mean, est.stderr] for name, est in moments]
    rows += [["hist_x1", lo, hi, count, ""] for lo, hi, count in ref.histogram]
    config = {"replicas": args.replicas, "tol": args.tol, "seed": args.seed, "bins": args.bins}
    payload = {
        "moments": {name: {"mean": est.mean, "stderr": _num(est.stderr)} for name, est in moments},
        "histogram_x1": [{"lo": lo, "hi": hi, "count": c} for lo, hi, c in ref.histogram],
    }
    write_outputs(Path(args.out), "pd-ref", config, columns, rows, payload)
    return EXIT_OK


def cmd_exact(args) -> int:
    lo, hi = EXACT_N_RANGE
    if args.qmax < 0:
        print("error: --qmax must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    if not lo <= args.n <= hi or args.n + 2 * args.qmax > EXACT_MAX_DEGREE:
        print(f"error: need {lo} <= n <= {hi} and n + 2*qmax <= {EXACT_MAX_DEGREE}", file=sys.stderr)
        return EXIT_SIZE
    records, rows, checks = [], [], []
    ok = True
    for q in range(args.qmax + 1):
        try:
            a = co.a_q_coefficients(args.n, q)
        except co.RouteMismatch as exc:
            print(f"FAIL {exc}", file=sys.stderr)
            return EXIT_FAIL
        tau = co.tau_q(args.n, q)
        values = tau.values()
        nonneg = all(v >= 0 for v in values.values())
        mass_one = tau.total_mass() == 1
        ok = ok and nonneg and mass_one
        checks.append({"q": q, "routes_agree": True, "nonnegative": nonneg, "total_mass_one": mass_one})
        records.append(co.golden_record(args.n, q, a))
        for l in sorted(a):
            rows.append([q, l, co.format_rational(a[l]), float(a[l])])
    config = {"n": args.n, "qmax": args.qmax}
    write_outputs(Path(args.out), "exact", config, ["q", "l", "coefficient", "value"], rows,
                  {"records": records, "checks": checks})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(args) -> int:
    start = time.perf_counter()
    try:
        results = oracle.run_suite(args.nmax)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + (f"  [{r.detail}]" if r.detail else ""))
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed in {time.perf_counter() - start:.2f}s")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitmerge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="half-step split-merge trajectories")
    p.add_argument("--init", nargs="+", default=["1.0"], help="initial masses (space or comma separated)")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--replicas", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("pd-ref", help="PD(1) stick-breaking reference sample")
    p.add_argument("--replicas", type=int, required=True)
    p.add_argument("--tol", type=float, default=pd.DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=20)
    p.add_argument("--out", required=True)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_pd_reference)

    p = sub.add_parser("exact", help="exact hook coefficients a_q(l)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("oracle-check", help="brute-force oracle suite")
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
