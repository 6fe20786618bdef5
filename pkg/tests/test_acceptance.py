"""Acceptance criteria, one test each, with their time limits.

Run ``python3 tests/test_acceptance.py`` for a bare PASS/FAIL listing; under
pytest the same lines appear in the terminal summary.
"""

from __future__ import annotations

import time
from math import comb

import pytest

from drlab import betti
from drlab.oracle.crossval import in_envelope
from drlab.oracle.fields import DEFAULT_PRIME, SECOND_PRIME, FieldSpec
from drlab.oracle.graded import (
    IdealPowerSpec,
    eagon_northcott_columns,
    hilbert_function,
    mu_graded_ideal,
    oracle_mu_mk,
    oracle_type,
    presentation_mu,
)
from drlab.params import RingParams, classify
from drlab.tableaux import BoxParams

LINES: list[str] = []


def rings(max_n, min_t=2):
    return [
        RingParams(t, m, n)
        for n in range(2, max_n + 1)
        for m in range(2, n + 1)
        for t in range(min_t, m + 1)
    ]


def boxes():
    return [BoxParams(M, N, t) for N in range(1, 8) for M in range(N, 8) for t in range(1, 5)]


ENVELOPE = [p for p in rings(5) if in_envelope(p)]


def c1_classifier():
    bad = [
        p for p in rings(10)
        if classify(p).almost_gorenstein != (p.m == p.n or p.m == p.t == 2)
    ]
    return not bad, f"{len(rings(10))} rings, {len(bad)} disagreements"


def c2_closed_forms():
    bad = []
    for box in boxes():
        top = box.length
        if betti.rank_c(top, box) != betti.type_closed_form(box):
            bad.append((box, "C_MN"))
        if box.M > box.N and betti.rank_c(top - 1, box) != betti.penult_closed_form(box):
            bad.append((box, "C_MN-1"))
    return not bad, f"{len(boxes())} boxes, mismatches {bad}"


def c3_resolution_sanity():
    bad = []
    for box in boxes():
        table = betti.betti_table(box)
        ok = table.alternating_sum == 0
        ok &= table[1] == comb(box.M + box.t - 1, box.t) * comb(box.N + box.t - 1, box.t)
        if box.t == 1:
            ok &= table.ranks == tuple(comb(box.length, k) for k in range(box.length + 1))
        if not ok:
            bad.append(box)
    return not bad, f"{len(boxes())} boxes, failures {bad}"


def c4_mu_formulas():
    seen = []
    for m, n in [(2, 2), (2, 3), (3, 4), (3, 5)]:
        for ell in range(3):
            got = mu_graded_ideal(RingParams(2, m, n), IdealPowerSpec(ell, 1))
            seen.append(got == comb(m + ell, ell + 1) * n)
    values = [oracle_mu_mk(RingParams(2, m, n)) for m, n in [(2, 3), (2, 4), (3, 4), (3, 5)]]
    formula = [comb(n, n - m + 1) * n for m, n in [(2, 3), (2, 4), (3, 4), (3, 5)]]
    ok = all(seen) and values == formula == [9, 16, 24, 50]
    return ok, f"M Q^l checks {sum(seen)}/{len(seen)}; mu(M K) = {values}"


def c5_maximal_minors():
    en = [presentation_mu(eagon_northcott_columns(m), m, m * (m + 1)) for m in (2, 3)]
    direct = oracle_mu_mk(RingParams(2, 2, 3))
    return en == [9, 32] and direct == 9, f"presentation {en}, direct {direct}"


def c6_type():
    bad = []
    for p in ENVELOPE:
        r = oracle_type(p)
        if not r == betti.cm_type(p) == betti.type_closed_form(betti.box_of(p)):
            bad.append((p, r))
    named = oracle_type(RingParams(2, 3, 5)), oracle_type(RingParams(3, 3, 4))
    return not bad and named == (6, 3), f"{len(ENVELOPE)} instances, named {named}, mismatches {bad}"


def c7_bound():
    bad, equal = [], []
    for p in ENVELOPE:
        if p.m == p.n:
            continue
        mu = oracle_mu_mk(p)
        lb = p.m * p.n * betti.cm_type(p) - betti.penult_closed_form(betti.box_of(p))
        if mu < lb:
            bad.append((p, mu, lb))
        if mu == lb:
            equal.append(f"({p.t},{p.m},{p.n})={mu}")
    required = {"(2,2,3)=9", "(2,3,4)=24", "(2,3,5)=50"}
    return not bad and required <= set(equal), f"equality at {', '.join(equal)}; violations {bad}"


def c8_contradiction():
    bad = []
    for p in rings(12):
        if p.m == p.n:
            continue
        passes = betti.ag_necessary_condition(p).passes
        if p.n <= 8 and (p.t >= 3 or p.m >= 3) and passes:
            bad.append(p)
        if p.m == p.t == 2 and not passes:
            bad.append(p)
    return not bad, f"violations {bad}"


def c9_binomial():
    grid = all(betti.binomial_inequality(m, ell)[2] for m in range(3, 31) for ell in range(1, 31))
    edge = betti.binomial_inequality(2, 1)
    return grid and edge == (6, 6, False), f"grid holds: {grid}; (2,1) -> {edge[0]} vs {edge[1]}"


def c10_characteristic():
    fields = [FieldSpec(DEFAULT_PRIME), FieldSpec(SECOND_PRIME), FieldSpec.rational()]
    out = []
    for p in [RingParams(2, 2, 3), RingParams(2, 3, 4), RingParams(3, 3, 4)]:
        hfs = [hilbert_function(p, 4, f) for f in fields]
        out.append(all(h == hfs[0] for h in hfs))
    return all(out), f"agreement per instance {out}"


CRITERIA = [
    (1, "classifier table", c1_classifier, 1.0),
    (2, "closed forms vs tableau sums", c2_closed_forms, 30.0),
    (3, "resolution sanity", c3_resolution_sanity, None),
    (4, "mu formulas for t = 2", c4_mu_formulas, 60.0),
    (5, "maximal-minor generator count", c5_maximal_minors, None),
    (6, "type agreement", c6_type, None),
    (7, "resolution lower bound", c7_bound, None),
    (8, "necessary condition fails off the AG cases", c8_contradiction, 1.0),
    (9, "binomial inequality", c9_binomial, None),
    (10, "characteristic independence", c10_characteristic, 120.0),
]


def evaluate(number, title, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    secs = time.perf_counter() - start
    in_time = limit is None or secs < limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = "" if limit is None else f" (limit {limit:g} s)"
    line = f"[{status}] criterion {number:>2}: {title} - {secs:.2f} s{budget} - {detail}"
    return ok and in_time, line


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    ok, line = evaluate(number, title, fn, limit)
    LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
