import random
from fractions import Fraction

import pytest
import sympy

from filigrade import linalg
from filigrade.catalog import (A, B, L, Q, InvalidSpec, ModelSpec, adapted_basis_defects,
                               alpha_count, automorphism_from_generators, coeff_table,
                               default_alphas, dixmier_lister, dixmier_lister_sigma, make_model,
                               n74, n74_automorphism, quasi_to_adapted, torus_automorphism)
from filigrade.lie import (JacobiViolation, associated_graded, change_basis, is_automorphism,
                           is_filiform, jacobi_violations)

from conftest import A_FIXTURES, B_FIXTURES


def sympy_coeff_table(p, alphas, n, kind):
    bound = n - p - 1 if kind == "A" else n - p - 2
    keys = [(i, j) for i in range(1, bound) for j in range(i, bound) if i + j <= bound]
    sym = {k: sympy.Symbol(f"a_{k[0]}_{k[1]}") for k in keys}
    eqs = []
    for (i, j) in keys:
        if j == i:
            eqs.append(sym[i, j])
        elif j == i + 1:
            eqs.append(sym[i, j] - sympy.Rational(str(alphas[i - 1])))
        if (i, j + 1) in sym and (i + 1, j) in sym:
            eqs.append(sym[i, j] - sym[i + 1, j] - sym[i, j + 1])
    sol = sympy.solve(eqs, list(sym.values()), dict=True)[0]
    return {k: Fraction(str(sol[s])) for k, s in sym.items()}


@pytest.mark.parametrize("kind,n,p,alphas", [
    ("A", 6, 1, (1,)), ("A", 7, 1, (1, 2)), ("A", 9, 1, (1, -1, Fraction(1, 2))),
    ("A", 10, 2, (2, 3, 5)), ("B", 8, 1, (-1, 2)), ("B", 10, 1, (1, 1, 1)),
])
def test_coeff_table_matches_symbolic_solve(kind, n, p, alphas):
    assert coeff_table(p, alphas, n, kind) == sympy_coeff_table(p, alphas, n, kind)


def test_coeff_table_values():
    t = coeff_table(1, (1, 2), 7)
    assert (t[1, 2], t[1, 3], t[2, 3], t[1, 4]) == (1, 1, 2, -1)
    t = coeff_table(1, (-1, 2), 8, "B")
    assert (t[1, 3], t[1, 4]) == (-1, -3)
    assert all(v == 0 for v in coeff_table(1, (0, 0, 0), 9).values())


def test_alpha_counts_and_validation():
    assert alpha_count("A", 6, 1) == 1 and alpha_count("B", 8, 1) == 2
    for bad in [ModelSpec("L", 2), ModelSpec("Q", 7), ModelSpec("A", 6, 3, ()),
                ModelSpec("A", 6, 1, (1, 0)), ModelSpec("B", 8, 4), ModelSpec("X", 5)]:
        with pytest.raises(InvalidSpec):
            bad.validate()


@pytest.mark.parametrize("n", range(3, 13))
def test_L_filiform(n):
    a = L(n)
    assert not jacobi_violations(a)
    assert is_filiform(a) == (True, n - 1)
    assert len(a.constants) == n - 2


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_Q_filiform(n):
    a = Q(n)
    assert is_filiform(a) == (True, n - 1)
    # n-3 thread entries and n/2 - 1 top entries
    assert len(a.constants) == (n - 3) + (n // 2 - 1)
    assert a.bracket_basis(1, n - 2) == {n - 1: -1}  # [Y2, Y_{n-1}] = -Y_n


@pytest.mark.parametrize("spec", A_FIXTURES + B_FIXTURES, ids=lambda s: s.label())
def test_rank_one_fixtures(spec):
    a = make_model(spec)
    assert is_filiform(a) == (True, spec.n - 1)
    ref = L(spec.n) if spec.kind == "A" else Q(spec.n)
    assert associated_graded(a).constants == associated_graded(ref).constants


def test_inconsistent_alphas_rejected():
    with pytest.raises(JacobiViolation):
        B(8, 1, (1, 1))


def test_default_alphas_are_valid():
    for kind, n, p in [("A", 7, 1), ("B", 8, 1), ("A", 8, 3)]:
        al = default_alphas(kind, n, p)
        assert any(al)
        make_model(ModelSpec(kind, n, p, al))


@pytest.mark.parametrize("spec", [ModelSpec("Q", 6), ModelSpec("Q", 8)] + B_FIXTURES,
                         ids=lambda s: s.label())
def test_quasi_to_adapted(spec):
    a = make_model(spec)
    m = quasi_to_adapted(a)
    b = change_basis(a, m)
    assert adapted_basis_defects(b) == []


def test_adapted_input_is_fixed():
    assert quasi_to_adapted(L(6)) == linalg.identity(6)
    assert adapted_basis_defects(A(7, 1, (1, 2))) == []


def test_literal_quasi_matrix_fails_for_deformed_b():
    # X1 = Y1 - Y2 with X_i = Y_i otherwise is only adapted when the alphas vanish
    a = B(6, 1, (1,))
    m = linalg.identity(6, Fraction(1))
    m[1][0] = Fraction(-1)
    assert "[X1,X3] != X4" in adapted_basis_defects(change_basis(a, m))


@pytest.mark.parametrize("spec", [ModelSpec("L", 6), ModelSpec("Q", 8), ModelSpec("A", 7, 1, (1, 2)),
                                  ModelSpec("B", 8, 1, (-1, 2))], ids=lambda s: s.label())
def test_torus_acts(spec):
    a = make_model(spec)
    t = None if spec.kind in ("A", "B") else 3
    assert is_automorphism(a, torus_automorphism(spec, 2, t))


def test_n74_and_its_automorphisms():
    a = n74()
    assert is_filiform(a) == (True, 6)
    rng = random.Random(4)
    for _ in range(5):
        m = n74_automorphism(*(Fraction(rng.randint(-3, 3)) for _ in range(10)))
        assert is_automorphism(a, m)
        assert all(m[i][i] == 1 for i in range(7))
        assert all(m[i][j] == 0 for i in range(7) for j in range(i + 1, 7))


def test_generator_extension_rejects_bad_images():
    with pytest.raises(ValueError):
        automorphism_from_generators(n74(), [1, 0, 0, 0, 0, 0, 0], [0, 2, 0, 0, 0, 0, 0])


def test_dixmier_lister_sigma_is_not_an_automorphism():
    a = dixmier_lister()
    s = dixmier_lister_sigma()
    assert linalg.mat_mul(s, s) == linalg.identity(8)
    assert not is_automorphism(a, s)
