"""Verification sweeps behind ``drlab verify``.

The formula suite checks the closed forms against tableau sums and each
other; the oracle suite compares them with brute-force linear algebra.
Every check returns :class:`~drlab.report.Result` records, so sweeps can be
fanned out over processes and merged in any order.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable, Iterable, List, Sequence

from . import betti
from .errors import ParameterError, ResourceError
from .oracle import crossval
from .oracle.fields import FieldSpec
from .params import RingParams, a_invariant, classify, krull_dim, normalize, reduced_shape
from .report import Provenance, Report, Result
from .tableaux import BoxParams

SUITES = ("formulas", "oracle", "all")
INEQ_M = range(3, 31)
INEQ_ELL = range(1, 31)


class BatchError(ParameterError):
    """Malformed batch file."""


def box_checks(box: BoxParams) -> List[Result]:
    params = {"M": box.M, "N": box.N, "t": box.t}
    start = time.perf_counter()
    table = betti.betti_table(box)
    secs = time.perf_counter() - start
    F = Provenance.FORMULA
    ranks = table.ranks
    out = [
        Result("ranks", ",".join(map(str, ranks)), F, params, ranks[0] == 1 and min(ranks) >= 1,
               seconds=secs, detail="C_0 = 1 and every C_k >= 1"),
        Result("alternating sum", table.alternating_sum, F, params, table.alternating_sum == 0, 0),
        Result("C_1 = minor count", ranks[1], F, params,
               ranks[1] == comb(box.rank_f, box.t) * comb(box.rank_g, box.t),
               comb(box.rank_f, box.t) * comb(box.rank_g, box.t)),
        Result("C_MN closed form", ranks[-1], F, params,
               ranks[-1] == betti.type_closed_form(box), betti.type_closed_form(box)),
    ]
    if box.M > box.N:
        penult = betti.penult_closed_form(box)
        out.append(Result("C_MN-1 closed form", ranks[-2], F, params, ranks[-2] == penult, penult))
    if box.t == 1:
        koszul = tuple(comb(box.length, k) for k in range(box.length + 1))
        out.append(Result("Koszul ranks", ",".join(map(str, ranks)), F, params, ranks == koszul,
                          ",".join(map(str, koszul))))
    return out


def ring_checks(p: RingParams) -> List[Result]:
    params = {"t": p.t, "m": p.m, "n": p.n}
    F = Provenance.FORMULA
    M, N = reduced_shape(p)
    c = classify(p)
    ag = betti.ag_necessary_condition(p)
    d = krull_dim(p)
    out = [
        Result("codimension", M * N, F, params, d + M * N == p.m * p.n, p.m * p.n - d),
        Result("AG condition", "passes" if ag.passes else "fails", F, params,
               ag.passes == c.almost_gorenstein,
               "passes" if c.almost_gorenstein else "fails",
               detail=f"mu={ag.mu_mk} bound={ag.upper_bound}" + ("" if ag.exact else " (mu is a lower bound)")),
        Result("minimal multiplicity", c.minimal_multiplicity, F, params,
               c.minimal_multiplicity == (p.m != p.n and a_invariant(p) == 1 - d),
               p.m != p.n and a_invariant(p) == 1 - d, detail=f"a={a_invariant(p)} dim={d}"),
    ]
    if p.m < p.n:
        a = betti.alpha(p)
        r = betti.cm_type(p)
        g = betti.penult_closed_form(betti.box_of(p))
        ok = Fraction(p.t + p.ell - 1, p.ell) * a == r and p.n * (p.m - p.t + 1) * a == g
        out.append(Result("alpha identities", a, F, params, ok, detail=f"type={r} rank G={g}"))
        if p.t == 2:
            lb = betti.mu_mk_lower_bound(p)
            exact = betti.mu_mk_t2(p.m, p.n)
            out.append(Result("resolution bound vs exact mu(M K)", lb, F, params, None, exact,
                              detail="equality" if lb == exact else "strict"))
    if p.t == 2:
        expected = comb(p.n - 1, p.n - p.m)
        out.append(Result("type binomial", betti.cm_type(p), F, params, betti.cm_type(p) == expected, expected))
    return out


def inequality_results() -> List[Result]:
    failures = [(m, ell) for m in INEQ_M for ell in INEQ_ELL if not betti.binomial_inequality(m, ell)[2]]
    lhs, rhs, holds = betti.binomial_inequality(2, 1)
    F = Provenance.FORMULA
    return [
        Result("binomial inequality grid", f"{len(failures)} failures", F, {}, not failures, "0 failures",
               detail=f"m in [{INEQ_M.start},{INEQ_M.stop - 1}], l in [{INEQ_ELL.start},{INEQ_ELL.stop - 1}]"),
        Result("binomial inequality at m=2 l=1", f"{lhs} vs {rhs}", F, {}, not holds, "not strict",
               detail="hypothesis m >= 3 is sharp"),
    ]


def box_grid(max_m: int, max_n: int, max_t: int) -> List[BoxParams]:
    return [
        BoxParams(M, N, t)
        for N in range(1, max_m + 1)
        for M in range(N, max_n + 1)
        for t in range(1, max_t + 1)
    ]


def ring_grid(max_m: int, max_n: int, max_t: int) -> List[RingParams]:
    return [
        RingParams(t, m, n)
        for t in range(2, max_t + 1)
        for m in range(t, max_m + 1)
        for n in range(m, max_n + 1)
    ]


def oracle_checks(p: RingParams, field: FieldSpec, dmax: int = 3) -> List[Result]:
    params = {"t": p.t, "m": p.m, "n": p.n}
    try:
        results = crossval.cross_validate(p, field, dmax).results
        results += crossval.regression_results(p, field, crossval.load_regression(), dmax)
    except ResourceError as exc:
        return [Result("oracle", "skipped", Provenance.ORACLE, params, None, fields=(str(field),), detail=str(exc))]
    return results


def _fan_out(fn: Callable, items: Sequence, jobs: int, *extra) -> List[Result]:
    out: List[Result] = []
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(fn, items, *([e] * len(items) for e in extra)):
                out.extend(chunk)
    else:
        for item in items:
            out.extend(fn(item, *extra))
    return out


def read_batch(path: str | Path) -> List[RingParams]:
    """Read ``t,rows,cols`` rows; blank lines and ``#`` comments are ignored."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BatchError(f"cannot read batch file: {exc}") from None
    numbered = [
        (i, ln) for i, ln in enumerate(text.splitlines(), 1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not numbered:
        raise BatchError("batch file has no header")
    rows_iter = ((i, next(csv.reader([ln]))) for i, ln in numbered)
    _, header = next(rows_iter)
    if [h.strip() for h in header] != ["t", "rows", "cols"]:
        raise BatchError(f"batch header must be 't,rows,cols', got {','.join(header)!r}")
    out = []
    for lineno, row in rows_iter:
        if len(row) != 3:
            raise BatchError(f"batch line {lineno}: expected 3 fields, got {row}")
        try:
            t, rows, cols = (int(x.strip()) for x in row)
        except ValueError:
            raise BatchError(f"batch line {lineno}: non-integer field in {row}") from None
        try:
            out.append(normalize(t, rows, cols))
        except ParameterError as exc:
            raise BatchError(f"batch line {lineno}: {exc}") from None
    return out


def run_verify(
    suite: str = "all",
    max_m: int = 3,
    max_n: int = 5,
    max_t: int = 3,
    field: FieldSpec | None = None,
    batch: Iterable[RingParams] | None = None,
    jobs: int = 1,
    dmax: int = 3,
    timing: bool = True,
) -> Report:
    if suite not in SUITES:
        raise ParameterError(f"unknown suite {suite!r}")
    field = field or FieldSpec.default()
    inputs = {"suite": suite, "field": str(field)}
    if batch is None:
        inputs.update(max_m=str(max_m), max_n=str(max_n), max_t=str(max_t))
        rings = ring_grid(max_m, max_n, max_t)
        boxes = box_grid(max_m, max_n, max_t)
        oracle_rings = [p for p in rings if crossval.in_envelope(p)]
    else:
        rings = sorted(set(batch))
        inputs["batch"] = str(len(rings))
        boxes = sorted({betti.box_of(p) for p in rings}, key=lambda b: (b.M, b.N, b.t))
        oracle_rings = rings
    report = Report("verify", inputs, timing=timing)
    if suite in ("formulas", "all"):
        report.extend(_fan_out(box_checks, boxes, jobs))
        report.extend(_fan_out(ring_checks, rings, jobs))
        report.extend(inequality_results())
    if suite in ("oracle", "all"):
        report.extend(_fan_out(oracle_checks, oracle_rings, jobs, field, dmax))
    return report.sort()
