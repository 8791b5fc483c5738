import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcset.correlation import QarySequence, aacf, accf, correlation_table, cyclic_shift
from zcset.cyclo import CycloValue, complex_estimate
from zcset.family import ZcsFamily
from zcset.verify import set_correlation

from conftest import complex_set_correlation


def seq(q, digits):
    return QarySequence(q, tuple(digits))


def test_accf_constant_sequence():
    c = seq(2, (0, 0, 0, 0))
    assert accf(c, c, 1).coeffs == (3, 0)


def test_accf_reference_rows_orthogonal():
    c = seq(6, (0, 0, 0, 0, 0, 3))
    d = seq(6, (0, 3, 0, 3, 0, 0))
    v = accf(c, d, 0)
    assert v.coeffs == (3, 0, 0, 3, 0, 0)
    assert v.is_zero()


def test_accf_shift_one():
    c = seq(2, (0, 0, 0, 1))
    v = accf(c, c, 1)
    assert v.coeffs == (2, 1)
    assert abs(complex_estimate(v) - 1) < 1e-12


@pytest.mark.parametrize("u, coeffs", [(2, (1, 1)), (3, (0, 1)), (0, (4, 0))])
def test_aacf_examples(u, coeffs):
    assert aacf(seq(2, (0, 0, 0, 1)), u).coeffs == coeffs


def test_negative_shift_uses_lower_branch():
    c = seq(4, (0, 1, 2, 3))
    d = seq(4, (0, 0, 0, 0))
    # sum_i c_i conj(d_{i+1}) over i = 0..2
    assert accf(c, d, -1) == CycloValue.from_exponents(4, [0, 1, 2])


@pytest.mark.parametrize(
    "c, d, u",
    [
        (seq(2, (0, 1)), seq(4, (0, 1)), 0),
        (seq(2, (0, 1)), seq(2, (0, 1, 1)), 0),
        (seq(2, (0, 1)), seq(2, (0, 1)), 2),
        (seq(2, (0, 1)), seq(2, (0, 1)), -2),
    ],
)
def test_accf_errors(c, d, u):
    with pytest.raises(ValueError):
        accf(c, d, u)


def test_sequence_invariants():
    with pytest.raises(ValueError):
        QarySequence(4, (0, 4))
    with pytest.raises(ValueError):
        QarySequence(4, ())
    with pytest.raises(ValueError):
        QarySequence(1, (0,))
    assert QarySequence.from_any(4, (5, -1)).exponents == (1, 3)


def test_cyclic_shift_examples():
    assert cyclic_shift(("a", "b", "c", "d"), 1) == ("d", "a", "b", "c")
    v = [1, 2, 3]
    assert cyclic_shift(v, 0) == v
    assert cyclic_shift(v, 3) == v
    assert np.array_equal(cyclic_shift(np.array([1, 2, 3]), 1), [3, 1, 2])
    assert cyclic_shift(seq(4, (0, 1, 2)), 2).exponents == (1, 2, 0)


@pytest.mark.parametrize("u", [-1, 4])
def test_cyclic_shift_range(u):
    with pytest.raises(ValueError):
        cyclic_shift((1, 2, 3), u)


@st.composite
def seq_pairs(draw, max_q=12, max_len=10):
    q = draw(st.integers(2, max_q))
    L = draw(st.integers(1, max_len))
    a = draw(st.lists(st.integers(0, q - 1), min_size=L, max_size=L))
    b = draw(st.lists(st.integers(0, q - 1), min_size=L, max_size=L))
    u = draw(st.integers(-(L - 1), L - 1))
    return seq(q, a), seq(q, b), u


@given(seq_pairs())
def test_conjugate_symmetry(data):
    c, d, u = data
    assert accf(c, d, -u).coeffs == accf(d, c, u).conjugate().coeffs


@given(seq_pairs())
def test_energy(data):
    c, _, _ = data
    assert aacf(c, 0).coeffs == (c.L,) + (0,) * (c.q - 1)


@given(seq_pairs())
def test_coefficient_conservation(data):
    c, d, u = data
    assert sum(accf(c, d, u).coeffs) == c.L - abs(u)


@given(seq_pairs())
def test_matches_complex_definition(data):
    c, d, u = data
    expected = complex_set_correlation(
        np.array([c.exponents]), np.array([d.exponents]), c.q, u
    )
    v = accf(c, d, u)
    assert abs(complex_estimate(v) - expected) < 1e-9
    assert v.is_zero() == (abs(expected) < 1e-9)


@st.composite
def small_families(draw):
    q = draw(st.integers(2, 8))
    M = draw(st.integers(1, 4))
    N = draw(st.integers(1, 3))
    L = draw(st.integers(1, 7))
    flat = draw(st.lists(st.integers(0, q - 1), min_size=M * N * L, max_size=M * N * L))
    return ZcsFamily.from_array(np.array(flat).reshape(M, N, L), q)


@settings(max_examples=60, deadline=None)
@given(small_families())
def test_correlation_table_matches_pairwise_route(fam):
    table = correlation_table(fam.to_array(), fam.q)
    L = fam.L
    for p in range(fam.M):
        for t in range(fam.M):
            for u in range(-(L - 1), L):
                assert tuple(table[p, t, u + L - 1]) == set_correlation(fam[p], fam[t], u).coeffs


def test_correlation_table_two_families(reference_family):
    arr = reference_family.to_array()
    full = correlation_table(arr, 6)
    part = correlation_table(arr[:2], 6, other=arr[3:])
    assert np.array_equal(part, full[:2, 3:])
