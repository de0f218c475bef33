from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from muntzcad.sparsepoly import SparsePolynomial

F = Fraction

poly_strategy = st.dictionaries(
    st.integers(0, 8), st.fractions(min_value=-5, max_value=5), max_size=5
).map(SparsePolynomial)


def test_canonical_form_drops_zeros():
    p = SparsePolynomial({3: F(1, 2), 1: 0})
    assert p.terms == {3: F(1, 2)}
    assert (p - p).is_zero()


def test_rejects_negative_exponent():
    with pytest.raises(ValueError):
        SparsePolynomial({-1: 1})


def test_arithmetic_and_eval():
    p = SparsePolynomial({0: -1, 1: 1})  # t - 1
    q = SparsePolynomial({0: 1, 1: 1})  # t + 1
    assert p * q == SparsePolynomial({2: 1, 0: -1})
    assert (p + q) == SparsePolynomial({1: 2})
    assert (p**3)(F(3, 2)) == F(1, 8)
    assert 2 * p == p.scale(2)


def test_derivative():
    p = SparsePolynomial({4: F(1, 2), 1: 3, 0: 7})
    assert p.derivative() == SparsePolynomial({3: 2, 0: 3})
    assert p.derivative(4) == SparsePolynomial({0: 12})
    assert p.derivative(5).is_zero()


def test_structure():
    p = SparsePolynomial({5: 1, 2: -1})
    assert p.support == (2, 5)
    assert p.degree == 5
    assert SparsePolynomial().degree == -1
    assert p.to_json() == {"2": "-1", "5": "1"}


@given(poly_strategy, poly_strategy, st.fractions(min_value=-3, max_value=3))
def test_evaluation_is_ring_morphism(p, q, t):
    assert (p + q)(t) == p(t) + q(t)
    assert (p * q)(t) == p(t) * q(t)


@given(poly_strategy, poly_strategy)
def test_derivative_is_linear_and_leibniz(p, q):
    assert (p + q).derivative() == p.derivative() + q.derivative()
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()
