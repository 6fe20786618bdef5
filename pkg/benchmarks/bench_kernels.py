"""Compare the compiled and numpy row-reduction kernels on oracle matrices.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each case times the kernel alone on a prebuilt coefficient matrix, then the
whole oracle call (matrix assembly included) with each backend selected.
"""

from __future__ import annotations

import argparse
import time

from drlab.oracle import graded, linalg
from drlab.oracle.fields import FieldSpec
from drlab.oracle.graded import IdealPowerSpec, _dense, multiples
from drlab.oracle.polys import GenericMatrixSpec, check_columns, minors
from drlab.params import RingParams

P = FieldSpec()

CASES = [
    ("I_2 of 3x5, degree 4", RingParams(2, 3, 5), 4),
    ("I_2 of 4x4, degree 4", RingParams(2, 4, 4), 4),
    ("I_2 of 3x4, degree 5", RingParams(2, 3, 4), 5),
    ("I_3 of 4x4, degree 5", RingParams(3, 4, 4), 5),
]

END_TO_END = [
    ("hilbert (2,3,5) d<=4", lambda: graded.hilbert_function(RingParams(2, 3, 5), 4, P)),
    ("mu(M K) (3,3,5)", lambda: graded.mu_graded_ideal(RingParams(3, 3, 5), IdealPowerSpec(2, 1), P)),
]


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = linalg.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the numpy fallback is timed")

    print(f"{'case':<26} {'shape':>13} " + " ".join(f"{b:>9}" for b in backends) + "   speedup")
    for label, p, d in CASES:
        X = GenericMatrixSpec(p.m, p.n)
        ncols = check_columns(X.nvars, d)
        A = _dense(multiples(minors(X, p.t), X.nvars, d), ncols, P.p)
        ranks, secs = set(), []
        for b in backends:
            secs.append(best(lambda: ranks.add(linalg.echelon_mod_p(A.copy(), P.p, False, b)[0]), args.repeat))
        assert len(ranks) == 1, ranks
        speed = f"{secs[-1] / secs[0]:7.1f}x" if len(secs) == 2 else ""
        shape = f"{A.shape[0]}x{A.shape[1]}"
        print(f"{label:<26} {shape:>13} " + " ".join(f"{s:8.3f}s" for s in secs) + f"  {speed}")

    print()
    saved = linalg.BACKEND
    try:
        for label, fn in END_TO_END:
            secs, values = [], set()
            for b in backends:
                linalg.BACKEND = b
                secs.append(best(lambda: values.add(str(fn())), args.repeat))
            assert len(values) == 1, values
            speed = f"{secs[-1] / secs[0]:7.1f}x" if len(secs) == 2 else ""
            print(f"{label:<40} " + " ".join(f"{s:8.3f}s" for s in secs) + f"  {speed}")
    finally:
        linalg.BACKEND = saved


if __name__ == "__main__":
    main()
