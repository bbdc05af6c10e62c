from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from mouldcalc.algebra import (Eliminator, LinearForm, SparsePoly, exact_divide, format_rational,
                               kernel_basis, matrix_rank, parse_rational, substitute_linear)
from mouldcalc.exceptions import ArityError, NotDivisible

from conftest import polys, rationals


def P(arity, terms):
    return SparsePoly(arity, terms)


class TestSubstitution:
    def test_product_of_sums(self):
        p = P(2, {(1, 1): 1})
        assert substitute_linear(p, [(1, 1), (1, 0)], 2) == P(2, {(2, 0): 1, (1, 1): 1})

    def test_identity_forms(self):
        p = P(3, {(2, 0, 1): 3, (0, 1, 0): Fraction(-1, 2), (0, 0, 0): 7})
        units = [LinearForm.unit(i, 3) for i in range(3)]
        assert substitute_linear(p, units, 3) == p

    def test_sign_cancels(self):
        assert substitute_linear(P(1, {(2,): 1}), [(-1,)], 1) == P(1, {(2,): 1})

    def test_arity_checked(self):
        with pytest.raises(ArityError):
            substitute_linear(P(2, {(1, 0): 1}), [(1,)], 1)


forms2 = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=2, max_size=2)


@given(polys(2), polys(2), forms2)
def test_substitution_is_a_ring_homomorphism(p, q, forms):
    def sub(r):
        return substitute_linear(r, forms, 3)
    assert sub(p * q) == sub(p) * sub(q)
    assert sub(p + q) == sub(p) + sub(q)


@given(polys(2), forms2, st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_substitution_matches_evaluation(p, forms, point):
    lhs = substitute_linear(p, forms, 3).evaluate(point)
    inner = [sum(a * x for a, x in zip(f, point)) for f in forms]
    assert lhs == p.evaluate(inner)


class TestExactDivide:
    def test_examples(self):
        assert exact_divide(P(2, {(1, 1): 2, (0, 2): 1}), (0, 1)) == P(2, {(1, 0): 2, (0, 1): 1})
        assert exact_divide(SparsePoly.zero(1), (1,)) == SparsePoly.zero(1)
        assert exact_divide(P(2, {(2, 0): 1, (0, 2): -1}), (1, 1)) == P(2, {(1, 0): 1, (0, 1): -1})

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_divide(P(2, {(1, 0): 1, (0, 0): 1}), (0, 1))
        with pytest.raises(NotDivisible):
            exact_divide(P(1, {(1,): 1}), (0,))


@given(polys(3), st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any))
def test_divide_after_multiply(p, form):
    L = LinearForm(form).to_poly()
    assert exact_divide(p * L, form) == p


class TestKernel:
    def test_examples(self):
        assert kernel_basis([[1, 1], [2, 2]]) == [[1, -1]]
        assert kernel_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
        assert len(kernel_basis([[0, 0, 0], [0, 0, 0]])) == 3

    def test_ncols_without_rows(self):
        assert kernel_basis([], ncols=2) == [[1, 0], [0, 1]]


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=1, max_size=5))


@given(matrices)
def test_kernel_annihilates_and_has_correct_dimension(A):
    K = kernel_basis(A)
    for v in K:
        for row in A:
            assert sum(a * x for a, x in zip(row, v)) == 0
    # rank from an independent implementation
    rank = sympy.Matrix(A).rank()
    assert len(K) == len(A[0]) - rank
    assert matrix_rank(A) == rank


@given(matrices)
def test_kernel_is_reduced(A):
    K = kernel_basis(A)
    leads = [next(j for j, x in enumerate(v) if x) for v in K]
    assert leads == sorted(set(leads))
    for i, (v, c) in enumerate(zip(K, leads)):
        assert v[c] == 1
        assert all(K[k][c] == 0 for k in range(len(K)) if k != i)
    # same answer from sympy's nullspace put in the same normal form
    ref = sympy.Matrix([list(v) for v in sympy.Matrix(A).nullspace()] or sympy.zeros(0, len(A[0])))
    if K:
        assert sympy.Matrix(K) == ref.rref()[0]


def test_eliminator_streaming_matches_batch():
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0], [1, 3, 4, 4]]
    el = Eliminator(4)
    added = [el.add_row({j: Fraction(x) for j, x in enumerate(r) if x}) for r in rows]
    assert added == [True, False, True, False]
    assert el.rank == 2
    assert el.kernel() == kernel_basis(rows)


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q
