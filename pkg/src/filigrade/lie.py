"""Lie algebras given by structure constants over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import linalg


class JacobiViolation(ValueError):
    """Raised when a bracket table does not satisfy the Jacobi identity."""

    def __init__(self, triples, message=None):
        self.triples = list(triples)
        if message is None:
            shown = ", ".join(f"({i},{j},{k})" for i, j, k, _ in self.triples[:6])
            more = "" if len(self.triples) <= 6 else f" and {len(self.triples) - 6} more"
            message = f"Jacobi identity fails on {len(self.triples)} triple(s): {shown}{more}"
        super().__init__(message)


class NotNilpotent(ValueError):
    pass


class NotFiliform(ValueError):
    pass


def _add_into(acc: dict, vec: Mapping, scale=1):
    for k, c in vec.items():
        y = acc.get(k, 0) + scale * c
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


class LieAlgebra:
    """A finite-dimensional Lie algebra on a labelled basis ``e_0 .. e_{dim-1}``.

    ``brackets`` maps index pairs ``(i, j)`` to ``{k: coefficient}`` meaning
    ``[e_i, e_j] = sum coefficient * e_k``.  Pairs may be given in either
    order; they are stored with ``i < j``.  Unless ``check=False`` the
    Jacobi identity is verified and :class:`JacobiViolation` raised on
    failure.
    """

    def __init__(self, dim: int, brackets: Mapping, labels: Sequence[str] | None = None, check: bool = True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index out of range: {(i, j)}")
            if isinstance(terms, Mapping):
                terms = terms.items()
            terms = [(k, Fraction(c)) for k, c in terms]
            if any(not 0 <= k < dim for k, _ in terms):
                raise ValueError(f"bracket target out of range in {(i, j)}")
            if i == j:
                if any(c for _, c in terms):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            _add_into(table.setdefault((i, j), {}), dict(_merge(terms)), sign)
        self.constants = {key: tuple(sorted(v.items())) for key, v in sorted(table.items()) if v}
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("need one label per basis vector")
        if check:
            bad = jacobi_violations(self)
            if bad:
                raise JacobiViolation(bad)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={len(self.constants)})"

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.constants == other.constants

    def __hash__(self):
        return hash((self.dim, tuple(self.constants.items())))

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return dict(self.constants.get((i, j), ()))
        return {k: -c for k, c in self.constants.get((j, i), ())}

    def bracket_sparse(self, x: Mapping, y: Mapping) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                if i != j:
                    _add_into(out, self.bracket_basis(i, j), a * b)
        return out

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        out = self.bracket_sparse(_to_sparse(x), _to_sparse(y))
        return self.dense(out)

    def dense(self, v: Mapping) -> tuple[Fraction, ...]:
        return tuple(Fraction(v.get(k, 0)) for k in range(self.dim))

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def ad(self, x: Sequence) -> list[list[Fraction]]:
        """Matrix of ``ad x``; column ``j`` holds ``[x, e_j]``."""
        xs = _to_sparse(x)
        cols = [self.dense(self.bracket_sparse(xs, {j: 1})) for j in range(self.dim)]
        return linalg.transpose(cols)

    def structure_terms(self):
        """Iterate ``(i, j, k, c)`` over all nonzero constants with ``i < j``."""
        for (i, j), terms in self.constants.items():
            for k, c in terms:
                yield i, j, k, c


def _merge(terms):
    acc: dict[int, Fraction] = {}
    for k, c in terms:
        acc[k] = acc.get(k, 0) + c
    return acc.items()


def _to_sparse(v: Sequence) -> dict[int, Fraction]:
    return {i: Fraction(c) for i, c in enumerate(v) if c}


def bracket(a: LieAlgebra, x, y):
    return a.bracket(x, y)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})


def jacobi_violations(a: LieAlgebra):
    """All basis triples ``i < j < k`` where the Jacobi identity fails.

    Each entry is ``(i, j, k, residual)`` with residual
    ``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`` as a dense tuple.
    """
    out = []
    for i, j, k in combinations(range(a.dim), 3):
        r: dict[int, Fraction] = {}
        _add_into(r, a.bracket_sparse(a.bracket_basis(i, j), {k: 1}))
        _add_into(r, a.bracket_sparse(a.bracket_basis(j, k), {i: 1}))
        _add_into(r, a.bracket_sparse(a.bracket_basis(k, i), {j: 1}))
        if r:
            out.append((i, j, k, a.dense(r)))
    return out


def change_basis(a: LieAlgebra, m, labels=None, check=True) -> LieAlgebra:
    """Rewrite ``a`` in the basis given by the columns of ``m``."""
    n = a.dim
    cols = [{i: Fraction(m[i][j]) for i in range(n) if m[i][j]} for j in range(n)]
    inv = linalg.inverse(m)
    table = {}
    for i, j in combinations(range(n), 2):
        v = a.bracket_sparse(cols[i], cols[j])
        if v:
            coords = linalg.mat_vec(inv, a.dense(v))
            table[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(n, table, labels=labels, check=check)


def is_automorphism(a: LieAlgebra, m) -> bool:
    n = a.dim
    if linalg.det(linalg.as_rational_matrix(m)) == 0:
        return False
    cols = [{i: Fraction(m[i][j]) for i in range(n) if m[i][j]} for j in range(n)]
    for i, j in combinations(range(n), 2):
        lhs: dict[int, Fraction] = {}
        for k, c in a.bracket_basis(i, j).items():
            _add_into(lhs, cols[k], c)
        if lhs != a.bracket_sparse(cols[i], cols[j]):
            return False
    return True


# ---------------------------------------------------------------------------
# Subspaces and the lower central series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its reduced row echelon basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, linalg.row_space(vectors, ambient_dim))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span(linalg.identity(n, Fraction(1)), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(v) if x) for v in self.basis]

    def contains(self, v) -> bool:
        return linalg.rank(list(self.basis) + [list(v)]) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def intersection_dim(self, other: "Subspace") -> int:
        return self.dim + other.dim - linalg.rank(list(self.basis) + list(other.basis))


def bracket_subspaces(a: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    vecs = [a.bracket(x, y) for x in u.basis for y in v.basis]
    return Subspace.span(vecs, a.dim)


def lower_central_series(a: LieAlgebra) -> list[Subspace]:
    """``[g^1, g^2, ...]`` with ``g^{k+1} = [g^k, g]``, stopping before the first repeat."""
    full = Subspace.full(a.dim)
    series = [full]
    while True:
        nxt = bracket_subspaces(a, series[-1], full)
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def nilindex(a: LieAlgebra) -> int | None:
    series = lower_central_series(a)
    if series[-1].dim != 0:
        return None
    return len(series) - 1


def is_filiform(a: LieAlgebra) -> tuple[bool, int | None]:
    series = lower_central_series(a)
    if series[-1].dim != 0:
        return False, None
    k = len(series) - 1
    dims = [s.dim for s in series]
    n = a.dim
    ok = k == n - 1 and dims[0] - dims[1] == 2 and all(dims[i] - dims[i + 1] == 1 for i in range(1, len(dims) - 1))
    return ok, k


def center(a: LieAlgebra) -> Subspace:
    rows = []
    for j in range(a.dim):
        col = a.ad(a.basis_vector(j))  # [e_j, x] = 0 for all x in the center
        rows.extend(col)
    return Subspace.span(linalg.kernel_basis(rows, a.dim), a.dim)


def associated_graded(a: LieAlgebra) -> LieAlgebra:
    """The graded algebra ``gr g = W_1 + W_2 + ...`` with ``W_i = g^i / g^{i+1}``.

    Each ``W_i`` is represented by the echelon basis vectors of ``g^i`` whose
    pivots are not pivots of ``g^{i+1}``; the output basis lists these
    representatives in order of increasing ``i``.
    """
    series = lower_central_series(a)
    if series[-1].dim != 0:
        raise NotNilpotent("associated graded algebra requires a nilpotent algebra")
    reps: list[list[tuple]] = []
    for i in range(len(series) - 1):
        lower = set(series[i + 1].pivots())
        reps.append([v for v, p in zip(series[i].basis, series[i].pivots()) if p not in lower])
    level, vecs = [], []
    for i, block in enumerate(reps):
        for v in block:
            level.append(i)
            vecs.append(v)
    n = a.dim
    table = {}
    for x, y in combinations(range(n), 2):
        t = level[x] + level[y] + 1  # index of W_{i+j} in reps (0-based levels)
        if t >= len(reps):
            continue
        v = a.bracket(vecs[x], vecs[y])
        if not any(v):
            continue
        # coordinates of v modulo g^{t+2}, on the representatives of W_{t+1}
        start = sum(len(b) for b in reps[:t])
        target = reps[t]
        lower = list(series[t + 1].basis)
        coords = linalg.solve(linalg.transpose([list(w) for w in target] + [list(w) for w in lower]), v)
        if coords is None:
            raise AssertionError("bracket left the central filtration")
        terms = {start + r: c for r, c in enumerate(coords[:len(target)]) if c}
        if terms:
            table[(x, y)] = terms
    labels = []
    for i, block in enumerate(reps):
        labels.extend(f"w{i + 1}_{r + 1}" if len(block) > 1 else f"w{i + 1}" for r in range(len(block)))
    return LieAlgebra(n, table, labels=labels)


def _mat_power_nonzero(m, power: int) -> bool:
    cur = m
    for _ in range(power - 1):
        cur = linalg.mat_mul(cur, m)
        if not any(x for row in cur for x in row):
            return False
    return any(x for row in cur for x in row)


def is_characteristic_vector(a: LieAlgebra, u) -> bool:
    """``u`` lies outside ``g^2`` and ``ad(u)^(n-2)`` is nonzero."""
    ok, _ = is_filiform(a)
    if not ok:
        raise NotFiliform("characteristic vectors are defined for filiform algebras")
    g2 = lower_central_series(a)[1]
    if g2.contains(u):
        return False
    return _mat_power_nonzero(a.ad(u), a.dim - 2)
