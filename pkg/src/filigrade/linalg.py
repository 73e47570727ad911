"""Exact linear algebra over Q and Z.

Rational matrices are lists of rows of :class:`fractions.Fraction`; integer
matrices are lists of rows of ``int``.  Every routine returns fresh objects and
never mutates its input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_rational_matrix(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def identity(n: int, one=1) -> list[list]:
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("dimension mismatch in mat_mul")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append([sum((row[k] * b[k][j] for k in range(inner) if row[k]), 0) for j in range(cols)])
    return out


def mat_vec(a, v):
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


# ---------------------------------------------------------------------------
# Row reduction.  Rows are kept sparse ({column: value}) since the systems
# assembled elsewhere (Leibniz, cocycle conditions) are overwhelmingly zero.
# ---------------------------------------------------------------------------

def _sparse(row) -> dict[int, Fraction]:
    if isinstance(row, dict):
        return {j: Fraction(x) for j, x in row.items() if x}
    return {j: Fraction(x) for j, x in enumerate(row) if x}


def _reduce_against(v: dict[int, Fraction], pivots: dict[int, dict[int, Fraction]]):
    # eliminate pivot columns in increasing order; each subtraction only adds
    # entries to the right of the eliminated column, so this terminates
    last = -1
    while True:
        hits = [j for j in v if j in pivots and j > last]
        if not hits:
            return v
        j = min(hits)
        c = v[j]
        for k, x in pivots[j].items():
            y = v.get(k, 0) - c * x
            if y:
                v[k] = y
            else:
                v.pop(k, None)
        last = j


def sparse_rref(rows: Iterable) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form as ``{pivot column: row}``."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        v = _reduce_against(_sparse(row), pivots)
        if not v:
            continue
        p = min(v)
        inv = 1 / v[p]
        pivots[p] = {k: x * inv for k, x in v.items()}
    for p in sorted(pivots, reverse=True):
        prow = pivots[p]
        for q, qrow in pivots.items():
            if q < p and p in qrow:
                c = qrow[p]
                for k, x in prow.items():
                    y = qrow.get(k, 0) - c * x
                    if y:
                        qrow[k] = y
                    else:
                        qrow.pop(k, None)
    return dict(sorted(pivots.items()))


def rref(m, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Return ``(R, pivot_columns)`` with ``R`` the nonzero rows of the RREF."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    piv = sparse_rref(m)
    rows = [[row.get(j, Fraction(0)) for j in range(ncols)] for row in piv.values()]
    return rows, list(piv)


def rank(m) -> int:
    return len(sparse_rref(m))


def kernel_from_sparse(rows: Iterable, ncols: int) -> list[tuple[Fraction, ...]]:
    piv = sparse_rref(rows)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, row in piv.items():
            if f in row:
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def kernel_basis(m, ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : m v = 0}``.

    One vector per free column of the RREF, with a 1 in that column; the
    result depends only on the row space of ``m``, so equal inputs give
    identical output.
    """
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(m[0])
    return kernel_from_sparse(m, ncols)


def row_space(vectors: Iterable, ncols: int) -> tuple[tuple[Fraction, ...], ...]:
    """Canonical (RREF) basis of the span of ``vectors``."""
    piv = sparse_rref(vectors)
    return tuple(tuple(row.get(j, Fraction(0)) for j in range(ncols)) for row in piv.values())


def solve(m, b) -> tuple[Fraction, ...] | None:
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    if not m:
        return None if any(b) else ()
    ncols = len(m[0])
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    piv = sparse_rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for p, row in piv.items():
        x[p] = row.get(ncols, Fraction(0))
    return tuple(x)


def inverse(m) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    piv = sparse_rref(aug)
    if list(piv)[:n] != list(range(n)) or len(piv) != n:
        raise ZeroDivisionError("matrix is singular")
    return [[piv[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]


def det(m):
    """Determinant by fraction-free (Bareiss) elimination; exact for int or Fraction."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0 * a[0][0]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return ``(U, S, V)`` with ``U m V = S``.

    ``U`` and ``V`` are unimodular, ``S`` is diagonal with nonnegative entries
    and ``S[0][0] | S[1][1] | ...``.  Pivots are chosen of smallest absolute
    value to keep entries small.
    """
    a = [[int(x) for x in row] for row in m]
    r = len(a)
    c = len(a[0]) if r else 0
    U = identity(r)
    V = identity(c)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # remainders smaller than the pivot: promote the smallest and repeat
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, r) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, c) if a[t][j]]
            if cand:
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return U, a, V


def diagonal(s) -> list[int]:
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]
