import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zcset.boolean import (
    PolyFunction,
    add,
    constant,
    digits,
    sequence_of,
    sum_sequences,
    truncate,
    variable,
)
from zcset.correlation import QarySequence


def test_gbf_sequence_example():
    f = variable(1, 2, 3, 4, coef=3)
    assert sequence_of(f).exponents == (0, 3, 0, 3, 0, 3, 0, 3)


def test_egbf_variable_sequences():
    assert sequence_of(variable(1, 3, 2, 3)).exponents == (0, 1, 2, 0, 1, 2, 0, 1, 2)
    assert sequence_of(variable(2, 3, 2, 3)).exponents == (0, 0, 0, 1, 1, 1, 2, 2, 2)


def test_truncate_examples():
    s = sequence_of(variable(1, 2, 3, 4, coef=3))
    assert truncate(s, 5).exponents == (0, 3, 0, 3, 0)
    assert truncate(s, s.L) == s
    with pytest.raises(ValueError):
        truncate(s, s.L + 1)
    with pytest.raises(ValueError):
        truncate(s, 0)


def test_add_identity_and_cancellation():
    f = variable(1, 2, 3, 6, coef=3)
    zero = PolyFunction(2, 3, 6)
    assert add(f, zero) == f
    assert add(f, f).terms == ()


def test_add_evaluation_example():
    f = PolyFunction(2, 3, 6, ((3, frozenset({1, 3})),))
    g = variable(1, 2, 3, 6)
    assert (f + g)(1, 0, 1) == 4


def test_add_mismatch():
    with pytest.raises(ValueError):
        add(variable(1, 2, 3, 6), variable(1, 3, 3, 6))


def test_invalid_functions():
    with pytest.raises(ValueError):
        PolyFunction(5, 2, 4)
    with pytest.raises(ValueError):
        PolyFunction(2, 2, 4, ((1, [1, 1]),))
    with pytest.raises(ValueError):
        PolyFunction(2, 2, 4, ((1, {3}),))


def test_coefficients_reduced():
    f = PolyFunction(2, 2, 4, ((7, {1}), (4, {2}), (2, ())))
    assert f.terms == ((2, frozenset()), (3, frozenset({1})))


def test_str():
    f = PolyFunction(2, 3, 6, ((3, {1, 3}), (1, {2})))
    assert str(f) == "1x2 + 3x1x3"


@st.composite
def functions(draw, b=None, n=None, q=None):
    q = q or draw(st.sampled_from([2, 4, 6, 8, 12]))
    b = b or draw(st.sampled_from([d for d in range(2, q + 1) if q % d == 0]))
    n = n if n is not None else draw(st.integers(0, 3))
    vars_ = st.frozensets(st.integers(1, n), max_size=n) if n else st.just(frozenset())
    terms = draw(st.lists(st.tuples(st.integers(-20, 20), vars_), max_size=5))
    return PolyFunction(b, n, q, tuple(terms))


@st.composite
def function_pairs(draw):
    f = draw(functions())
    g = draw(functions(b=f.b, n=f.n_vars, q=f.q))
    return f, g


@given(function_pairs())
def test_linearity_of_evaluation(pair):
    f, g = pair
    lhs = sequence_of(add(f, g))
    rhs = sum_sequences([sequence_of(f), sequence_of(g)])
    assert lhs == rhs


@given(functions())
def test_sequence_matches_pointwise_evaluation(f):
    s = sequence_of(f)
    for h in range(f.b**f.n_vars):
        assert s.exponents[h] == f(*digits(h, f.b, f.n_vars))


@given(st.integers(1, 4), st.sampled_from([2, 4, 6]), st.data())
def test_gbf_specialisation(m, q, data):
    """b = 2: index i = sum_l i_l 2^(l-1), value = sum of coef * product of bits."""
    f = data.draw(functions(b=2, n=m, q=q))
    s = sequence_of(f)
    for bits in itertools.product((0, 1), repeat=m):
        i = sum(bit << l for l, bit in enumerate(bits))
        val = sum(c * all(bits[v - 1] for v in vs) for c, vs in f.terms) % q
        assert s.exponents[i] == val


@given(st.integers(2, 7), st.integers(0, 4), st.data())
def test_index_round_trip(b, n, data):
    h = data.draw(st.integers(0, b**n - 1))
    ds = digits(h, b, n)
    assert sum(d * b**l for l, d in enumerate(ds)) == h


def test_digits_overflow():
    with pytest.raises(ValueError):
        digits(9, 3, 2)


@given(st.integers(0, 11), st.integers(0, 3))
def test_constant_functions(value, n):
    s = sequence_of(constant(value, 3, n, 12))
    assert set(s.exponents) == {value}
    assert s.L == 3**n


def test_product_rule_for_nonbinary_monomials():
    # y1*y2 over Z_3^2 into Z_6, evaluated as an ordinary product
    f = PolyFunction(3, 2, 6, ((1, {1, 2}),))
    assert sequence_of(f) == QarySequence(6, (0, 0, 0, 0, 1, 2, 0, 2, 4))
