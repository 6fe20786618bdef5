import pytest
from hypothesis import given, strategies as st

from drlab.errors import ParameterError
from drlab.params import (
    Reason,
    RingParams,
    a_invariant,
    classify,
    codim,
    krull_dim,
    normalize,
    reduced_shape,
)
from drlab.oracle.graded import h_vector


def all_params(limit):
    return [
        RingParams(t, m, n)
        for n in range(2, limit + 1)
        for m in range(2, n + 1)
        for t in range(2, m + 1)
    ]


def test_normalize_transposes():
    assert normalize(2, 3, 2) == RingParams(2, 2, 3)
    assert normalize(3, 3, 3) == RingParams(3, 3, 3)


@pytest.mark.parametrize("args", [(4, 3, 5), (1, 3, 3), (3, 2, 9)])
def test_normalize_rejects(args):
    with pytest.raises(ParameterError):
        normalize(*args)


@pytest.mark.parametrize("bad", [(1, 2, 2), (3, 2, 3), (2, 4, 3), (2, 2.0, 3), (True, 2, 3)])
def test_ringparams_validation(bad):
    with pytest.raises(ParameterError):
        RingParams(*bad)


def test_derived_accessors():
    p = RingParams(2, 3, 5)
    assert (p.ell, p.s, p.nvars) == (2, 1, 15)


@pytest.mark.parametrize("p,d", [((2, 2, 3), 4), ((3, 3, 3), 8), ((2, 2, 2), 3)])
def test_krull_dim(p, d):
    assert krull_dim(RingParams(*p)) == d


@pytest.mark.parametrize("p", all_params(12))
def test_codim_consistency(p):
    M, N = reduced_shape(p)
    assert M >= N >= 1
    assert krull_dim(p) + M * N == p.m * p.n
    assert codim(p) == M * N


def test_reduced_shape_examples():
    assert reduced_shape(RingParams(2, 2, 3)) == (2, 1)
    assert reduced_shape(RingParams(2, 3, 4)) == (3, 2)
    assert reduced_shape(RingParams(3, 3, 3)) == (1, 1)


def test_classify_examples():
    c = classify(RingParams(2, 2, 3))
    assert (c.gorenstein, c.almost_gorenstein, c.minimal_multiplicity) == (False, True, True)
    assert c.reason is Reason.TWO_BY_TWO_CASE
    c = classify(RingParams(3, 3, 3))
    assert (c.gorenstein, c.almost_gorenstein, c.minimal_multiplicity) == (True, True, False)
    assert c.reason is Reason.EQUAL_SIDES
    c = classify(RingParams(2, 3, 5))
    assert (c.gorenstein, c.almost_gorenstein, c.minimal_multiplicity) == (False, False, False)
    assert c.reason is Reason.NEITHER


def test_describe():
    assert classify(RingParams(2, 2, 3)).describe() == "almost Gorenstein (non-Gorenstein), minimal multiplicity"
    assert classify(RingParams(3, 3, 3)).describe() == "Gorenstein (hence almost Gorenstein)"
    assert classify(RingParams(2, 3, 5)).describe() == "not almost Gorenstein"


@given(st.integers(2, 12), st.integers(2, 12), st.integers(2, 12))
def test_classify_transpose_invariant(t, rows, cols):
    if t > min(rows, cols):
        return
    assert classify(normalize(t, rows, cols)) == classify(normalize(t, cols, rows))


@pytest.mark.parametrize("p", all_params(12))
def test_gorenstein_implies_almost(p):
    c = classify(p)
    assert not c.gorenstein or c.almost_gorenstein
    assert c.minimal_multiplicity == (p.m != p.n and p.m == p.t == 2)


@pytest.mark.parametrize("p", all_params(12))
def test_a_invariant_criterion(p):
    c = classify(p)
    hits = a_invariant(p) == 1 - krull_dim(p)
    assert hits == (c.minimal_multiplicity or (p.m == p.n and (p.t - 1) * (p.m - p.t + 1) == 1))
    if c.almost_gorenstein and p.m != p.n:
        assert (p.t - 1) * (p.m - (p.t - 1)) == 1


def test_a_invariant_equal_sides():
    assert a_invariant(RingParams(2, 2, 2)) == -2
    assert a_invariant(RingParams(3, 3, 3)) == -6


@pytest.mark.parametrize("p", [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 3, 3), (2, 3, 4), (3, 3, 3), (3, 3, 4)])
def test_a_invariant_against_hilbert_series(p):
    # a = deg h(z) - dim, read off the oracle Hilbert function
    p = RingParams(*p)
    h = h_vector(p, 4)
    top = max(i for i, x in enumerate(h) if x)
    assert top < len(h) - 1
    assert top - krull_dim(p) == a_invariant(p)


@pytest.mark.parametrize("p", [(2, 2, 3), (2, 2, 4), (2, 3, 4), (3, 3, 4)])
def test_minimal_multiplicity_against_hilbert_series(p):
    p = RingParams(*p)
    e = sum(h_vector(p, 4))
    assert (e == p.m * p.n - krull_dim(p) + 1) == classify(p).minimal_multiplicity
