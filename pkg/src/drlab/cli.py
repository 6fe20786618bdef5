"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parameter
error.  JSON output serializes every number as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional

from . import __version__, betti
from .errors import DrlabError
from .oracle.fields import FieldSpec
from .params import a_invariant, classify, codim, krull_dim, normalize
from .report import Provenance, Report, Result
from .tableaux import BoxParams
from .verify import SUITES, read_batch, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def classification_dict(t: int, rows: int, cols: int) -> Dict[str, object]:
    p = normalize(t, rows, cols)
    c = classify(p)
    return {
        "t": str(p.t),
        "m": str(p.m),
        "n": str(p.n),
        "gorenstein": c.gorenstein,
        "almost_gorenstein": c.almost_gorenstein,
        "minimal_multiplicity": c.minimal_multiplicity,
        "reason": c.reason.value,
        "verdict": c.describe(),
    }


def cmd_classify(args: argparse.Namespace) -> int:
    out = classification_dict(args.t, args.rows, args.cols)
    if args.json:
        sys.stdout.write(_dump(out))
    else:
        print(out["verdict"])
        for key, value in out.items():
            if key != "verdict":
                print(f"  {key}: {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


def invariants_report(t: int, rows: int, cols: int) -> Report:
    p = normalize(t, rows, cols)
    params = {"t": p.t, "m": p.m, "n": p.n}
    c = classify(p)
    ag = betti.ag_necessary_condition(p)
    report = Report("invariants", {"t": str(t), "rows": str(rows), "cols": str(cols)}, timing=False)

    def add(name: str, value, detail: str = "") -> None:
        report.add(Result(name, value, Provenance.FORMULA, params, detail=detail))

    add("dim", krull_dim(p))
    add("codim", codim(p))
    add("a-invariant", a_invariant(p))
    add("type", ag.cm_type)
    if p.m < p.n:
        add("alpha", betti.alpha(p))
    add("mu(M K)", ag.mu_mk, "exact" if ag.exact else "lower bound")
    add("AG upper bound", ag.upper_bound)
    add("AG condition", "passes" if ag.passes else "fails",
        f"{ag.mu_mk} {'<=' if ag.passes else '>'} {ag.upper_bound}")
    add("classification", c.describe(), c.reason.value)
    return report


def cmd_invariants(args: argparse.Namespace) -> int:
    report = invariants_report(args.t, args.rows, args.cols)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for r in report.results:
            text = f"{r.name}: {r.value}"
            print(text + (f" ({r.detail})" if r.detail else ""))
    return EXIT_OK


def betti_payload(t: int, M: int, N: int) -> Dict[str, object]:
    box = BoxParams(M, N, t)
    table = betti.betti_table(box)
    checks = {
        "alternating_sum": str(table.alternating_sum),
        "alternating_sum_ok": table.alternating_sum == 0,
        "type_closed_form_ok": table[-1] == betti.type_closed_form(box),
        "penult_closed_form_ok": None if M == N else table[-2] == betti.penult_closed_form(box),
    }
    return {
        "box": {"M": str(M), "N": str(N), "t": str(t)},
        "ranks": [str(r) for r in table.ranks],
        "checks": checks,
    }


def cmd_betti(args: argparse.Namespace) -> int:
    payload = betti_payload(args.t, args.M, args.N)
    checks = payload["checks"]
    ok = all(v is not False for k, v in checks.items() if k.endswith("_ok"))
    if args.json:
        sys.stdout.write(_dump(payload))
    elif args.csv:
        print("k,rank")
        for k, r in enumerate(payload["ranks"]):
            print(f"{k},{r}")
        for key, value in checks.items():
            print(f"# {key}={value}")
    else:
        width = max(len(r) for r in payload["ranks"])
        print(f"{'k':>3}  {'rank C_k':>{max(width, 8)}}")
        for k, r in enumerate(payload["ranks"]):
            print(f"{k:>3}  {r:>{max(width, 8)}}")
        flag = {True: "ok", False: "MISMATCH", None: "n/a"}
        print(f"alternating sum: {checks['alternating_sum']} ({flag[checks['alternating_sum_ok']]})")
        print(f"last rank vs closed form: {flag[checks['type_closed_form_ok']]}")
        print(f"penultimate rank vs closed form: {flag[checks['penult_closed_form_ok']]}")
    return EXIT_OK if ok else EXIT_FAIL


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S.%fZ")


def write_csv(report: Report, path: Path) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["params", "name", "value", "expected", "provenance", "passed", "fields"])
        for r in report.results:
            w.writerow([
                ";".join(f"{k}={v}" for k, v in r.params.items()), r.name, r.value,
                "" if r.expected is None else r.expected, r.provenance.value,
                "" if r.passed is None else r.passed, ";".join(r.fields),
            ])


def cmd_verify(args: argparse.Namespace) -> int:
    field = FieldSpec(args.prime) if args.prime is not None else FieldSpec.default()
    batch = read_batch(args.batch) if args.batch else None
    report = run_verify(
        args.suite, args.max_m, args.max_n, args.max_t, field, batch,
        jobs=args.jobs, dmax=args.dmax, timing=not args.no_timing,
    )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"report-{_timestamp()}.json"
    path.write_text(report.to_json())
    if args.csv:
        write_csv(report, Path(args.csv))
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.render_text())
        print(f"report written to {path}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"drlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--t", type=int, required=True, help="minor size")
        p.add_argument("--rows", type=int, required=True)
        p.add_argument("--cols", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="almost Gorenstein classification")
    ring_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="dimension, type, mu(M K) and the AG condition")
    ring_args(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("betti", help="ranks of the tableau resolution for a box")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--M", type=int, required=True, help="row length (M >= N)")
    p.add_argument("--N", type=int, required=True, help="number of rows")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="formula and oracle verification sweeps")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-t", type=int, default=3)
    p.add_argument("--prime", type=int, default=None, help="field characteristic (default $DRLAB_PRIME or 1000003)")
    p.add_argument("--batch", default=None, help="CSV file with header t,rows,cols")
    p.add_argument("--dmax", type=int, default=3, help="Hilbert function degree for field cross-checks")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", default=".", help="directory for report-<timestamp>.json")
    p.add_argument("--csv", default=None, help="also write results to this CSV file")
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    p.add_argument("--no-timing", action="store_true", help="omit per-check timings")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DrlabError as exc:
        print(f"drlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
