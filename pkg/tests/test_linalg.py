from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from filigrade import linalg

small_int = st.integers(min_value=-6, max_value=6)


def int_matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r)))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def rat_matrices():
    return st.integers(1, 6).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_small():
    r, piv = linalg.rref([[2, 4], [1, 3]])
    assert r == [[1, 0], [0, 1]] and piv == [0, 1]
    assert linalg.rank([[1, 2, 3], [2, 4, 6]]) == 1


def test_kernel_and_solve():
    k = linalg.kernel_basis([[1, 1, 0], [0, 0, 1]])
    assert len(k) == 1
    assert linalg.mat_vec([[1, 1, 0], [0, 0, 1]], k[0]) == (0, 0)
    assert linalg.solve([[1, 1], [1, -1]], [3, 1]) == (2, 1)
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_inverse_det():
    m = [[2, 1], [7, 4]]
    assert linalg.det(m) == 1
    assert linalg.mat_mul(m, linalg.inverse(m)) == linalg.identity(2)
    assert linalg.det([[1, 2], [2, 4]]) == 0
    with pytest.raises(ZeroDivisionError):
        linalg.inverse([[1, 2], [2, 4]])


def test_snf_known():
    _, s, _ = linalg.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert linalg.diagonal(s) == [2, 6, 12]


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_snf_properties(m):
    u, s, v = linalg.smith_normal_form(m)
    assert linalg.mat_mul(linalg.mat_mul(u, m), v) == s
    assert abs(linalg.det(u)) == 1 and abs(linalg.det(v)) == 1
    d = linalg.diagonal(s)
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert d[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i, row in enumerate(s):
        assert all(x == 0 for j, x in enumerate(row) if j != i)


@settings(max_examples=60, deadline=None)
@given(int_matrices(5, 5))
def test_snf_matches_sympy(m):
    ours = [x for x in linalg.diagonal(linalg.smith_normal_form(m)[1]) if x]
    theirs = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    ref = [abs(int(theirs[i, i])) for i in range(min(theirs.shape)) if theirs[i, i]]
    assert ours == sorted(ref)


@settings(max_examples=150, deadline=None)
@given(rat_matrices())
def test_kernel_rank_nullity(m):
    ncols = len(m[0])
    k = linalg.kernel_basis(m, ncols)
    assert linalg.rank(m) + len(k) == ncols
    for v in k:
        assert all(x == 0 for x in linalg.mat_vec(m, v))
    assert linalg.rank(k) == len(k) if k else True
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@given(rat_matrices())
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(m):
    r, piv = linalg.rref(m)
    r2, piv2 = linalg.rref(r)
    assert (r, piv) == (r2, piv2)


def test_fractions_stay_exact():
    m = linalg.as_rational_matrix([[1, 3], [3, 1]])
    inv = linalg.inverse(m)
    assert inv[0][0] == Fraction(-1, 8)
