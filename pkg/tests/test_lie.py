import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from filigrade import linalg
from filigrade.catalog import L, Q, dixmier_lister
from filigrade.lie import (JacobiViolation, LieAlgebra, NotFiliform, Subspace, abelian,
                           associated_graded, center, change_basis, is_automorphism,
                           is_characteristic_vector, is_filiform, jacobi_violations,
                           lower_central_series, nilindex)


def dense_jacobi_ok(a):
    """Independent check on a dense cube of structure constants."""
    n = a.dim
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in a.constants.items():
        for k, v in terms:
            c[i][j][k] += v
            c[j][i][k] -= v
    for i, j, k in combinations(range(n), 3):
        for t in range(n):
            s = sum(c[i][j][m] * c[m][k][t] + c[j][k][m] * c[m][i][t] + c[k][i][m] * c[m][j][t]
                    for m in range(n))
            if s:
                return False
    return True


def test_antisymmetry_and_storage():
    a = LieAlgebra(3, {(1, 0): {2: 1}})
    assert a.bracket_basis(0, 1) == {2: -1}
    assert a.constants == {(0, 1): ((2, Fraction(-1)),)}
    with pytest.raises(ValueError):
        LieAlgebra(2, {(0, 0): {1: 1}})


def test_jacobi_violation_reported():
    with pytest.raises(JacobiViolation) as exc:
        LieAlgebra(4, {(0, 1): {2: 1}, (2, 3): {0: 1}})
    assert [t[:3] for t in exc.value.triples] == [(0, 1, 3), (1, 2, 3)]


def test_heisenberg_like_l4():
    a = L(4)
    assert [s.dim for s in lower_central_series(a)] == [4, 2, 1, 0]
    assert nilindex(a) == 3
    assert is_filiform(a) == (True, 3)
    assert center(a).dim == 1


def test_abelian_not_filiform():
    assert is_filiform(abelian(3)) == (False, 1)
    assert nilindex(abelian(3)) == 1


def test_dixmier_lister_series():
    a = dixmier_lister()
    assert [s.dim for s in lower_central_series(a)] == [8, 4, 2, 0]
    assert is_filiform(a) == (False, 3)


def test_non_nilpotent():
    a = LieAlgebra(2, {(0, 1): {1: 1}})
    assert nilindex(a) is None
    assert is_filiform(a) == (False, None)


def test_associated_graded_of_thread():
    a = L(6)
    assert associated_graded(a).constants.keys() == a.constants.keys()


def test_characteristic_vector():
    a = L(5)
    assert is_characteristic_vector(a, a.basis_vector(0))
    assert not is_characteristic_vector(a, a.basis_vector(1))
    with pytest.raises(NotFiliform):
        is_characteristic_vector(abelian(3), (1, 0, 0))


def test_subspace_ops():
    s = Subspace.span([(1, 1, 0), (2, 2, 0)], 3)
    assert s.dim == 1 and s.contains((3, 3, 0)) and not s.contains((1, 0, 0))
    assert s <= Subspace.full(3)
    assert s.intersection_dim(Subspace.span([(1, 1, 0), (0, 0, 1)], 3)) == 1


def random_unitriangular(n, rng):
    m = linalg.identity(n, Fraction(1))
    for i in range(n):
        for j in range(i):
            m[i][j] = Fraction(rng.randint(-2, 2))
    return m


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([5, 6, 7]), st.integers(0, 10 ** 6), st.booleans())
def test_change_basis_preserves_structure(n, seed, use_q):
    a = Q(6) if use_q else L(n)
    m = random_unitriangular(a.dim, random.Random(seed))
    b = change_basis(a, m)
    assert not jacobi_violations(b) and dense_jacobi_ok(b)
    assert is_filiform(b) == is_filiform(a)
    # the inverse change of basis recovers the table
    assert change_basis(b, linalg.inverse(m)) == a


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda p: p[0] < p[1]),
                       st.dictionaries(st.integers(0, 3), st.integers(-2, 2), max_size=2), max_size=4))
def test_jacobi_matches_dense_oracle(table):
    a = LieAlgebra(4, table, check=False)
    assert (not jacobi_violations(a)) == dense_jacobi_ok(a)


def test_automorphism_checks():
    a = L(4)
    assert is_automorphism(a, linalg.identity(4))
    swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert not is_automorphism(a, swap)
