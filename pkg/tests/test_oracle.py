import random
import warnings
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from drlab.errors import FieldWarning, InhomogeneousError, ParameterError, RangeError, ResourceError
from drlab.oracle import graded, linalg
from drlab.oracle.crossval import load_regression, oracle_quantities, parse_regression
from drlab.oracle.fields import DEFAULT_PRIME, SECOND_PRIME, FieldSpec
from drlab.oracle.graded import (
    IdealPowerSpec,
    eagon_northcott_columns,
    graded_dim,
    graded_piece,
    hilbert_function,
    mu_graded_ideal,
    oracle_mu_mk,
    oracle_type,
    presentation_mu,
)
from drlab.oracle.polys import GenericMatrixSpec, check_columns, degree, minors, monomials
from drlab.params import RingParams

QQ = FieldSpec.rational()
P1 = FieldSpec(DEFAULT_PRIME)
P2 = FieldSpec(SECOND_PRIME)


def segre_hf(n, d):
    # k[2 x n] / I_2 is the Segre ring of P^1 x P^(n-1)
    return (d + 1) * comb(d + n - 1, d)


def hypersurface_hf(m, d):
    N = m * m
    return comb(d + N - 1, d) - (comb(d - m + N - 1, d - m) if d >= m else 0)


class TestFields:
    def test_validation(self):
        for bad in (4, 1, 0, -7, 2**31 + 11, "7"):
            with pytest.raises(ParameterError):
                FieldSpec(bad)
        assert str(FieldSpec(7)) == "GF(7)"
        assert str(QQ) == "QQ" and QQ.is_rational

    def test_companion_is_distinct(self):
        assert P1.companion() == P2
        assert P2.companion() == P1
        assert FieldSpec(101).companion() == P2

    def test_default_reads_env(self, monkeypatch):
        monkeypatch.delenv("DRLAB_PRIME", raising=False)
        assert FieldSpec.default() == P1
        monkeypatch.setenv("DRLAB_PRIME", "65537")
        assert FieldSpec.default() == P2
        monkeypatch.setenv("DRLAB_PRIME", "abc")
        with pytest.raises(ParameterError):
            FieldSpec.default()

    def test_small_characteristic_refused(self):
        with pytest.raises(ParameterError):
            hilbert_function(RingParams(2, 2, 3), 2, FieldSpec(3))


class TestPolys:
    def test_minor_counts(self):
        X = GenericMatrixSpec(2, 3)
        ms = minors(X, 2)
        assert len(ms) == 3 and all(len(f) == 2 for f in ms)
        ms = minors(GenericMatrixSpec(3, 4), 3)
        assert len(ms) == 4 and all(len(f) == 6 for f in ms)
        assert len(minors(GenericMatrixSpec(3, 3), 2, col_subset=range(2))) == 3
        with pytest.raises(RangeError):
            minors(X, 3)

    def test_minor_values(self):
        X = GenericMatrixSpec(2, 2)
        assert minors(X, 2) == [{(0, 3): 1, (1, 2): -1}]

    def test_degree(self):
        assert degree({(0, 1): 1}) == 2
        with pytest.raises(InhomogeneousError):
            degree({(0,): 1, (0, 1): 1})
        with pytest.raises(InhomogeneousError):
            degree({})

    def test_column_ceiling(self):
        with pytest.raises(ResourceError):
            check_columns(36, 6)
        assert check_columns(6, 3) == 56


class TestGraded:
    def test_graded_dim_examples(self):
        gens = minors(GenericMatrixSpec(2, 3), 2)
        assert graded_dim(gens, 2) == 3
        assert graded_dim(gens, 3) == comb(8, 3) - segre_hf(3, 3) == 16
        assert graded_dim([], 4, nvars=6) == 0
        assert graded_dim(gens, 1) == 0

    def test_inhomogeneous_generator(self):
        with pytest.raises(InhomogeneousError):
            graded_dim([{(0,): 1, (1, 2): 1}], 3)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_hilbert_segre(self, n):
        hf = hilbert_function(RingParams(2, 2, n), 4)
        assert hf == [segre_hf(n, d) for d in range(5)]

    @pytest.mark.parametrize("m", [2, 3])
    def test_hilbert_hypersurface(self, m):
        hf = hilbert_function(RingParams(m, m, m), 4)
        assert hf == [hypersurface_hf(m, d) for d in range(5)]

    def test_hilbert_examples(self):
        assert hilbert_function(RingParams(2, 2, 3), 2) == [1, 6, 18]
        assert hilbert_function(RingParams(2, 2, 2), 2) == [1, 4, 9]
        assert hilbert_function(RingParams(3, 3, 4), 0) == [1]
        with pytest.raises(RangeError):
            hilbert_function(RingParams(2, 2, 2), -1)

    def test_mu_examples(self):
        assert mu_graded_ideal(RingParams(2, 2, 3), IdealPowerSpec(1, 1)) == 9
        assert mu_graded_ideal(RingParams(2, 3, 5), IdealPowerSpec(2, 1)) == 50
        assert mu_graded_ideal(RingParams(2, 2, 3), IdealPowerSpec(1, 0)) == 2
        assert mu_graded_ideal(RingParams(2, 3, 4), IdealPowerSpec(0, 1)) == 12

    def test_ideal_power_spec(self):
        assert IdealPowerSpec(2, 1).degree(3) == 5
        with pytest.raises(RangeError):
            IdealPowerSpec(-1, 0)

    def test_oracle_type_and_mu(self):
        assert oracle_type(RingParams(2, 3, 5)) == 6
        assert oracle_type(RingParams(3, 3, 3)) == 1
        assert oracle_type(RingParams(3, 3, 4)) == 3
        assert oracle_mu_mk(RingParams(2, 2, 3)) == 9
        assert oracle_mu_mk(RingParams(2, 3, 4)) == 24
        assert oracle_mu_mk(RingParams(3, 3, 4)) >= 32

    def test_rational_mode_agrees(self):
        p = RingParams(2, 2, 3)
        assert mu_graded_ideal(p, IdealPowerSpec(1, 1), QQ) == 9
        assert oracle_type(RingParams(3, 3, 4), QQ) == 3

    def test_resource_ceiling(self):
        with pytest.raises(ResourceError):
            oracle_mu_mk(RingParams(2, 3, 5), max_columns=100)
        with pytest.raises(ResourceError):
            hilbert_function(RingParams(2, 3, 5), 3, max_columns=100)

    def test_dense_ceiling(self, monkeypatch):
        monkeypatch.setattr(graded, "MAX_DENSE_ENTRIES", 10)
        with pytest.raises(ResourceError):
            graded_dim(minors(GenericMatrixSpec(2, 3), 2), 3)

    def test_field_warning_on_disagreement(self, monkeypatch):
        real = graded._mu

        def skewed(p, spec, field, max_columns):
            return real(p, spec, field, max_columns) + (field.p == SECOND_PRIME)

        monkeypatch.setattr(graded, "_mu", skewed)
        with pytest.warns(FieldWarning):
            mu_graded_ideal(RingParams(2, 2, 3), IdealPowerSpec(1, 1), P1, cross_check=True)

    def test_no_warning_when_fields_agree(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert mu_graded_ideal(RingParams(2, 2, 3), IdealPowerSpec(1, 1), P1, cross_check=True) == 9

    @pytest.mark.parametrize("field", [P1, QQ], ids=str)
    def test_graded_piece_is_reduced(self, field):
        gens = minors(GenericMatrixSpec(2, 3), 2)
        piece = graded_piece(gens, 3, field)
        assert piece.dim == piece.matrix.shape[0] == 16
        assert piece.matrix.shape[1] == len(monomials(6, 3))
        assert list(piece.pivots) == sorted(piece.pivots)
        for row, c in enumerate(piece.pivots):
            col = piece.matrix[:, c]
            assert all((x == 1) if i == row else (x == 0) for i, x in enumerate(col))
            assert all(x == 0 for x in piece.matrix[row, :c])

    def test_graded_piece_pivots_match_across_fields(self):
        gens = minors(GenericMatrixSpec(2, 3), 2)
        assert graded_piece(gens, 3, P1).pivots == graded_piece(gens, 3, QQ).pivots

    def test_graded_dim_bounds(self):
        p = RingParams(3, 3, 4)
        X = GenericMatrixSpec(3, 4)
        J = graded.ideal_power_generators(p, 1)
        e = 2
        dim_j = graded_dim(J, e, nvars=X.nvars)
        assert dim_j <= comb(X.nvars + e - 1, e)
        mj = graded.multiples(J, X.nvars, e + 1)
        assert len(mj) == X.nvars * len(J)
        assert graded_dim(J, e + 1, nvars=X.nvars) <= X.nvars * dim_j


class TestPresentation:
    def test_eagon_northcott(self):
        assert presentation_mu(eagon_northcott_columns(2), 2, 6) == 9
        assert presentation_mu(eagon_northcott_columns(3), 3, 12) == 32

    def test_degenerate(self):
        assert presentation_mu([], 3, 4) == 12
        assert presentation_mu([[{(0,): 1}]], 1, 2) == 1

    def test_rejects(self):
        with pytest.raises(InhomogeneousError):
            presentation_mu([[{(0, 1): 1}]], 1, 2)
        with pytest.raises(InhomogeneousError):
            presentation_mu([[{(5,): 1}]], 1, 2)
        with pytest.raises(RangeError):
            presentation_mu([[{(0,): 1}]], 2, 2)


def random_matrix(rng, rows, cols, rank, p):
    A = rng.integers(0, p, size=(rows, rank)) @ rng.integers(0, p, size=(rank, cols)) % p
    return np.ascontiguousarray(A, dtype=np.int64)


class TestLinalg:
    @pytest.mark.parametrize("seed", range(8))
    def test_backends_agree(self, seed):
        rng = np.random.default_rng(seed)
        p = 65537
        A = random_matrix(rng, 30, 25, 7 + seed, p)
        results = []
        for backend in linalg.available_backends():
            B = A.copy()
            r, piv = linalg.echelon_mod_p(B, p, True, backend)
            results.append((r, list(piv), B[:r].tolist()))
        assert all(x == results[0] for x in results)
        assert results[0][0] == min(7 + seed, 25)

    def test_compiled_kernel_loaded(self):
        # the build is expected to ship the extension; the fallback is exercised above
        assert linalg.BACKEND in ("cython", "numpy")
        assert "numpy" in linalg.available_backends()

    def test_type_checks(self):
        with pytest.raises(TypeError):
            linalg.echelon_mod_p(np.zeros((2, 2), dtype=np.int32), 7)
        with pytest.raises(ValueError):
            linalg.echelon_mod_p(np.zeros((2, 2), dtype=np.int64), 7, backend="fortran")

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6))
    def test_rational_rank_matches_prime_rank(self, rows):
        # small integer entries: rank over QQ equals rank mod a large prime
        sparse = [{j: x for j, x in enumerate(r) if x} for r in rows]
        A = np.array(rows, dtype=np.int64)
        assert linalg.rank_rational(sparse) == linalg.rank_mod_p(A, DEFAULT_PRIME)

    def test_rational_reduced_form(self):
        rows = [{0: 2, 1: 4, 2: 6}, {0: 1, 1: 3, 2: 5}]
        basis, piv = linalg.echelon_rational(rows)
        assert piv == [0, 1]
        assert basis[0] == {0: 1, 2: Fraction(-1)}
        assert basis[1] == {1: 1, 2: Fraction(2)}


class TestRegressionFixture:
    def test_parse(self):
        text = "# header\n2 2 3 type 2\n\n3 3 4 mu_mk 32  # frozen\n"
        assert parse_regression(text) == {(2, 2, 3, "type"): 2, (3, 3, 4, "mu_mk"): 32}
        with pytest.raises(ValueError):
            parse_regression("2 2 3 type\n")

    def test_fixture_reproduced(self):
        fixture = load_regression()
        instances = sorted({k[:3] for k in fixture})
        assert len(instances) == 9
        for t, m, n in instances:
            got = oracle_quantities(RingParams(t, m, n), P1, dmax=4)
            for (tt, mm, nn, q), v in fixture.items():
                if (tt, mm, nn) == (t, m, n):
                    assert got[q] == v, (t, m, n, q)


def test_pure_env_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, DRLAB_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from drlab.oracle.linalg import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
