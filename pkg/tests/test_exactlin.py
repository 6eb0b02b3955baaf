from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lsb.errors import DimensionMismatch, FieldError
from lsb.exactlin import (F3, F5, QQ, Field, GradedDim, Matrix, Subspace, batch_rank, canonicalize, contains,
                          rank_kernel, subspace_intersection, subspace_sum, subspace_sum_intersect)

from strategies import matrices


@pytest.mark.parametrize("p", [2, 4, 9, 101, 1])
def test_bad_moduli_rejected(p):
    with pytest.raises(FieldError):
        Field(p)


def test_field_arithmetic():
    assert F5(7) == 2 and F5(-1) == 4
    assert F5.inv(2) == 3
    assert QQ("1/2") == Fraction(1, 2)
    assert str(F5) == "F5" and str(QQ) == "Q"
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_graded_dim():
    assert GradedDim.parse("2,1") == GradedDim(2, 1)
    assert GradedDim(2, 1) - GradedDim(1, 1) == GradedDim(1, 0)
    assert str(GradedDim(0, 2)) == "(0,2)"


def test_identity_and_zero():
    r, K = rank_kernel(Matrix.from_rows(F5, [[1, 0], [0, 1]]))
    assert (r, K.dim) == (2, 0)
    r, K = rank_kernel(Matrix.zeros(F5, 2, 3))
    assert (r, K.dim) == (0, 3)


def test_hand_elimination_example():
    # R2 - 2*R1 = (0, 0, 1 - 6) = 0 mod 5, so the rank is 1.
    # Kernel: x1 = -2 x2 - 3 x3; reduced basis {(1,0,3), (0,1,1)}.
    m = Matrix.from_rows(F5, [[1, 2, 3], [2, 4, 1]])
    r, K = rank_kernel(m)
    assert r == 1
    assert K.basis == ((1, 0, 3), (0, 1, 1))
    for v in K.basis:
        assert m.apply(v) == (0, 0)


def test_canonicalize_examples():
    S = canonicalize([(1, 0), (2, 0)], 2, F5)
    assert S.basis == ((1, 0),)
    assert canonicalize([], 3, F5).dim == 0
    T = canonicalize([(1, 1, 0), (0, 1, 1)], 3, QQ)
    assert T.basis == ((1, 0, -1), (0, 1, 1))


def test_sum_intersect_examples():
    e = lambda *v: canonicalize(v, 3, F5)
    a = e((1, 0, 0), (0, 1, 0))
    b = e((0, 1, 0), (0, 0, 1))
    s, i = subspace_sum_intersect(a, b)
    assert (s.dim, i.dim) == (3, 1)
    assert i.basis == ((0, 1, 0),)
    s, i = subspace_sum_intersect(e((1, 0, 0)), e((0, 1, 0), (0, 0, 1)))
    assert (s.dim, i.dim) == (3, 0)
    s, i = subspace_sum_intersect(a, a)
    assert s == a == i


def test_contains_examples():
    assert contains(canonicalize([(1, 2)], 2, F5), (3, 1))
    assert not contains(canonicalize([(0, 1)], 2, F5), (1, 0))
    assert (0, 0) in canonicalize([(0, 1)], 2, F5)
    with pytest.raises(DimensionMismatch):
        contains(canonicalize([(0, 1)], 2, F5), (1, 0, 0))


def test_grading_flag():
    assert canonicalize([(1, 0, 0), (0, 0, 1)], 3, F5, split=2).graded == GradedDim(1, 1)
    assert canonicalize([(1, 0, 1)], 3, F5, split=2).graded is None
    assert canonicalize([(1, 0, 1)], 3, F5, split=2).projection_dims() == GradedDim(1, 1)


@given(matrices())
def test_rank_nullity_and_transpose(mc):
    rows, c = mc
    m = Matrix.from_rows(F5, rows, c)
    r, K = rank_kernel(m)
    assert r + K.dim == c
    assert m.transpose().rank() == r
    for v in K.basis:
        assert all(x == 0 for x in m.apply(v))


@given(matrices(max_rows=5, max_cols=5), st.integers(1, 3))
def test_batch_rank_matches_exact(mc, reps):
    rows, c = mc
    if not rows or not c:
        return
    m = Matrix.from_rows(F5, rows, c)
    arr = np.array([rows] * reps)
    assert list(batch_rank(arr, 5)) == [m.rank()] * reps


@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_dimension_formula(a, b):
    ra, ca = a
    rb, cb = b
    n = 4
    A = canonicalize([r + [0] * (n - len(r)) for r in ra], n, F5)
    B = canonicalize([r + [0] * (n - len(r)) for r in rb], n, F5)
    S, I = subspace_sum(A, B), subspace_intersection(A, B)
    assert S.dim + I.dim == A.dim + B.dim
    assert A.issubset(S) and B.issubset(S) and I.issubset(A) and I.issubset(B)


@given(matrices(max_rows=4, max_cols=4))
def test_canonicalize_idempotent(mc):
    rows, c = mc
    S = canonicalize(rows, c, F5)
    assert canonicalize(S.basis, c, F5) == S
