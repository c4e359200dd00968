from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dpideals.polyring import (
    DimensionMismatch,
    MvPoly,
    divides,
    elementary_symmetric,
    from_indices,
    index_word,
    is_squarefree,
    lcm,
    monomial_str,
    monomials_of_degree,
    quotient,
    render,
)


def test_monomial_helpers():
    m = from_indices([1, 1, 3], 4)
    assert m == (2, 0, 1, 0)
    assert index_word(m) == (1, 1, 3)
    assert not is_squarefree(m)
    assert divides((1, 0, 1, 0), m)
    assert lcm((1, 1, 0, 0), (0, 1, 1, 0)) == (1, 1, 1, 0)
    assert quotient(m, (1, 0, 0, 0)) == (1, 0, 1, 0)
    assert monomial_str(m) == "x1^2*x3"


def test_squarefree_quadratics_in_index_lex_order():
    got = [monomial_str(m) for m in monomials_of_degree(4, 2, squarefree_only=True)]
    assert got == ["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"]


def test_monomial_counts():
    assert monomials_of_degree(3, 0) == [(0, 0, 0)]
    assert len(monomials_of_degree(5, 3)) == 35
    for n in range(1, 7):
        for d in range(5):
            assert len(monomials_of_degree(n, d)) == comb(n + d - 1, d)
            assert len(monomials_of_degree(n, d, True)) == comb(n, d)


def test_elementary_symmetric_examples():
    assert render(elementary_symmetric({1, 2, 3}, 2, 4)) == "x1*x2 + x1*x3 + x2*x3"
    one = elementary_symmetric({1, 2, 3, 4}, 0, 4)
    assert one == MvPoly.constant(1, 4)


def test_elementary_symmetric_shape():
    for n in range(1, 7):
        for r in range(n + 1):
            e = elementary_symmetric(range(1, n + 1), r, n)
            assert len(e) == comb(n, r)
            assert all(is_squarefree(m) and sum(m) == r and c == 1 for m, c in e.terms.items())


def test_elementary_symmetric_recurrence():
    for n in range(2, 9):
        for i in range(1, n + 1):
            full = elementary_symmetric(range(1, n + 1), i, n)
            head = elementary_symmetric(range(1, n), i, n)
            tail = elementary_symmetric(range(1, n), i - 1, n)
            assert full == head + MvPoly.var(n, n) * tail


def test_generating_function_at_ones():
    # sum_r e_r(1,...,1) z^r = (1 + z)^n
    for n in range(1, 9):
        ones = [1] * n
        values = [elementary_symmetric(range(1, n + 1), r, n).evaluate(ones) for r in range(n + 1)]
        assert values == [comb(n, r) for r in range(n + 1)]


def test_arithmetic_and_render():
    x1, x2 = MvPoly.var(1, 2), MvPoly.var(2, 2)
    p = (x1 + x2) ** 2
    assert render(p) == "x1^2 + 2*x1*x2 + x2^2"
    assert render(p - x1 * x1 * 1) == "2*x1*x2 + x2^2"
    assert (p * Fraction(1, 2)).terms[(2, 0)] == Fraction(1, 2)
    assert (x1 - x1).is_zero()
    assert p.homogeneous_degree() == 2
    assert (x1 + x1 * x2).homogeneous_degree() is None


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        MvPoly.var(1, 2) + MvPoly.var(1, 3)


def small_poly(n=3):
    mono = st.tuples(*[st.integers(0, 2)] * n)
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.dictionaries(mono, coeff, max_size=4).map(lambda t: MvPoly(n, t))


@settings(max_examples=100)
@given(small_poly(), small_poly(), small_poly())
def test_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(small_poly(), st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=2), min_size=3, max_size=3))
def test_evaluation_is_a_ring_map(p, point):
    q = p * p + p
    assert q.evaluate(point) == p.evaluate(point) ** 2 + p.evaluate(point)
