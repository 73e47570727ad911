"""Derivations, the diagonal torus rank and characteristic nilpotency."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .lie import LieAlgebra, NotFiliform, is_filiform


@dataclass(frozen=True)
class DerivationSpace:
    ambient: LieAlgebra
    basis: tuple  # tuple of n x n matrices (tuples of row tuples)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)


def _structure(a: LieAlgebra):
    n = a.dim
    return [[a.bracket_basis(i, j) for j in range(n)] for i in range(n)]


def leibniz_system(a: LieAlgebra) -> list[dict[int, Fraction]]:
    """Sparse rows of the linear system for D (unknown ``D[r][c]`` at ``r*n + c``).

    For each pair i < j and each output coordinate t:
    ``sum_k c^k_ij D[t][k] - sum_r D[r][i] c^t_rj - sum_r D[r][j] c^t_ir = 0``.
    """
    n = a.dim
    c = _structure(a)
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            eq: dict[int, dict[int, Fraction]] = {}

            def add(t, var, val):
                row = eq.setdefault(t, {})
                row[var] = row.get(var, 0) + val

            for k, ck in c[i][j].items():
                for t in range(n):
                    add(t, t * n + k, ck)
            for r in range(n):
                for t, v in c[r][j].items():
                    add(t, r * n + i, -v)
                for t, v in c[i][r].items():
                    add(t, r * n + j, -v)
            for row in eq.values():
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def _as_matrix(vec, n):
    return tuple(tuple(vec[r * n:(r + 1) * n]) for r in range(n))


def derivation_space(a: LieAlgebra) -> DerivationSpace:
    n = a.dim
    ker = linalg.kernel_from_sparse(leibniz_system(a), n * n)
    return DerivationSpace(a, tuple(_as_matrix(v, n) for v in ker))


def is_derivation(a: LieAlgebra, d) -> bool:
    n = a.dim
    cols = [tuple(d[r][i] for r in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = linalg.mat_vec(d, a.dense(a.bracket_basis(i, j)))
            rhs = [x + y for x, y in zip(a.bracket(cols[i], a.basis_vector(j)),
                                         a.bracket(a.basis_vector(i), cols[j]))]
            if any(x != y for x, y in zip(lhs, rhs)):
                return False
    return True


def is_characteristically_nilpotent(a: LieAlgebra, der: DerivationSpace | None = None) -> bool:
    """True iff every derivation is nilpotent.

    Runs the chain V_0 = K^n, V_{k+1} = Der(g) V_k.  It reaches 0 exactly
    when Der(g) acts nilpotently, which by Engel's theorem (Der(g) is a Lie
    algebra) is the same as every derivation being nilpotent.
    """
    n = a.dim
    der = der or derivation_space(a)
    space = linalg.row_space(linalg.identity(n, Fraction(1)), n)
    for _ in range(n):
        if not space:
            return True
        images = [linalg.mat_vec(d, v) for d in der.basis for v in space]
        nxt = linalg.row_space(images, n)
        if nxt == space:
            return False
        space = nxt
    return not space


def diagonal_derivations(a: LieAlgebra) -> list[tuple[Fraction, ...]]:
    """Basis of the diagonal derivations ``e_i -> l_i e_i`` as weight vectors ``l``."""
    n = a.dim
    rows = []
    for (i, j), terms in a.constants.items():
        for k, _ in terms:
            row = {i: Fraction(1)}
            row[j] = row.get(j, 0) + 1
            row[k] = row.get(k, 0) - 1
            rows.append(row)
    return linalg.kernel_from_sparse(rows, n)


def diagonal_torus_rank(a: LieAlgebra) -> int:
    """Dimension of the diagonal derivations in the given basis.

    Equals the rank for algebras presented in an adapted or quasi-adapted
    basis in which a maximal torus acts diagonally (the catalog models);
    for other bases it is only a lower bound.
    """
    flag, _ = is_filiform(a)
    if not flag:
        raise NotFiliform("diagonal_torus_rank expects a filiform algebra")
    return len(diagonal_derivations(a))
