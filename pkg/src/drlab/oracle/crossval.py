"""Formula-vs-oracle comparisons for a single ring, plus the frozen fixture."""

from __future__ import annotations

import time
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, Tuple, TypeVar

from .. import betti
from ..params import RingParams, a_invariant, classify, krull_dim
from ..report import Provenance, Report, Result
from .fields import FieldSpec
from .graded import (
    IdealPowerSpec,
    eagon_northcott_columns,
    h_from_hilbert,
    hilbert_function,
    mu_graded_ideal,
    oracle_mu_mk,
    oracle_type,
    presentation_mu,
)

T = TypeVar("T")
RegressionKey = Tuple[int, int, int, str]

REGRESSION_FILE = "oracle_regression.txt"


def _timed(fn: Callable[[], T]) -> tuple[T, float]:
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def _params(p: RingParams) -> Dict[str, int]:
    return {"t": p.t, "m": p.m, "n": p.n}


def in_envelope(p: RingParams) -> bool:
    """Instances the oracle is documented to handle quickly."""
    if p.t == 2:
        return p.m <= 3 and p.n <= 5
    if p.t == 3:
        return p.m == 3 and p.n <= 4
    return False


def mq_powers(p: RingParams) -> range:
    return range(0, max(2, p.n - p.m) + 1)


def cross_validate(
    p: RingParams, field: FieldSpec | None = None, dmax: int = 3
) -> Report:
    """Compare every applicable closed form for ``p`` against the oracle."""
    field = field or FieldSpec.default()
    other = field.companion() if not field.is_rational else FieldSpec.default()
    fields = (str(field),)
    params = _params(p)
    report = Report("cross_validate", {"t": str(p.t), "m": str(p.m), "n": str(p.n), "field": str(field)})

    r, secs = _timed(lambda: oracle_type(p, field))
    expected = betti.cm_type(p)
    report.add(Result("type", r, Provenance.BOTH, params, r == expected, expected, fields, secs))

    if p.t == 2:
        for ell in mq_powers(p):
            mu, secs = _timed(lambda: mu_graded_ideal(p, IdealPowerSpec(ell, 1), field))
            expected = betti.mu_mq_pow_t2(p.m, p.n, ell)
            report.add(Result(f"mu(M Q^{ell})", mu, Provenance.BOTH, params, mu == expected, expected, fields, secs))

    mu, secs = _timed(lambda: oracle_mu_mk(p, field))
    if p.m == p.n:
        expected = p.m * p.n
        report.add(Result("mu(M K)", mu, Provenance.BOTH, params, mu == expected, expected, fields, secs))
    elif p.t == 2:
        expected = betti.mu_mk_t2(p.m, p.n)
        report.add(Result("mu(M K)", mu, Provenance.BOTH, params, mu == expected, expected, fields, secs))
    else:
        bound = betti.mu_mk_lower_bound(p)
        detail = "equals bound" if mu == bound else f"exceeds bound by {mu - bound}"
        report.add(
            Result("mu(M K)", mu, Provenance.BOTH, params, mu >= bound, f">= {bound}", fields, secs, detail)
        )
    if p.m < p.n:
        bound = betti.mu_mk_lower_bound(p)
        report.add(
            Result(
                "mu(M K) vs resolution bound", mu, Provenance.BOTH, params, mu >= bound, f">= {bound}",
                fields, detail="equality" if mu == bound else "strict",
            )
        )

    if p.t == p.m and p.n == p.m + 1:
        v, secs = _timed(lambda: presentation_mu(eagon_northcott_columns(p.m), p.m, p.m * p.n, field))
        expected = betti.mu_mk_maximal_minors(p.m)
        report.add(
            Result("mu(M K) from presentation", v, Provenance.BOTH, params, v == expected == mu, expected, fields, secs)
        )

    (h1, h2), secs = _timed(lambda: (hilbert_function(p, dmax, field), hilbert_function(p, dmax, other)))
    report.add(
        Result(
            f"hilbert d<={dmax}", ",".join(map(str, h1)), Provenance.ORACLE, params, h1 == h2,
            ",".join(map(str, h2)), (str(field), str(other)), secs, "agreement across fields",
        )
    )
    h = h_from_hilbert(h1, krull_dim(p))
    top = max(i for i, x in enumerate(h) if x)
    if top < len(h) - 1:
        # the numerator has degree dim + a, so a zero tail pins a down
        a = top - krull_dim(p)
        report.add(
            Result("a-invariant from h-vector", a, Provenance.BOTH, params, a == a_invariant(p),
                   a_invariant(p), fields, detail="h=" + ",".join(map(str, h)))
        )
        if p.m < p.n:
            minimal = sum(h) == p.m * p.n - krull_dim(p) + 1
            flag = classify(p).minimal_multiplicity
            report.add(
                Result("minimal multiplicity from h-vector", minimal, Provenance.BOTH, params,
                       minimal == flag, flag, fields, detail=f"e={sum(h)}")
            )
    return report


def parse_regression(text: str) -> Dict[RegressionKey, int]:
    """Parse ``t m n quantity value`` records; blank lines and ``#`` comments skip."""
    out: Dict[RegressionKey, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected 't m n quantity value', got {raw!r}")
        t, m, n = (int(x) for x in parts[:3])
        out[(t, m, n, parts[3])] = int(parts[4])
    return out


def load_regression(path: str | Path | None = None) -> Dict[RegressionKey, int]:
    if path is None:
        text = resources.files("drlab").joinpath("data", REGRESSION_FILE).read_text()
    else:
        text = Path(path).read_text()
    return parse_regression(text)


def oracle_quantities(p: RingParams, field: FieldSpec, dmax: int = 3) -> Dict[str, int]:
    """Oracle values in the same vocabulary as the fixture file."""
    out = {"type": oracle_type(p, field), "mu_mk": oracle_mu_mk(p, field)}
    if p.t == 2:
        for ell in mq_powers(p):
            out[f"mu_mq_{ell}"] = mu_graded_ideal(p, IdealPowerSpec(ell, 1), field)
    for d, h in enumerate(hilbert_function(p, dmax, field)):
        out[f"hilbert_{d}"] = h
    return out


def regression_results(
    p: RingParams, field: FieldSpec, fixture: Dict[RegressionKey, int], dmax: int = 3
) -> list[Result]:
    values = oracle_quantities(p, field, dmax)
    results = []
    for (t, m, n, quantity), frozen in sorted(fixture.items()):
        if (t, m, n) != (p.t, p.m, p.n) or quantity not in values:
            continue
        v = values[quantity]
        results.append(
            Result(f"regression {quantity}", v, Provenance.ORACLE, _params(p), v == frozen, frozen, (str(field),))
        )
    return results
