"""The filiform algebras of nonzero rank (L_n, Q_n, A_n^p, B_n^p) and a few named examples.

Indices in bracket tables are 0-based; labels carry the usual 1-based names
(``X1 .. Xn`` for adapted bases, ``Y1 .. Yn`` for quasi-adapted ones).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .lie import LieAlgebra, is_automorphism

KINDS = ("L", "Q", "A", "B")


class InvalidSpec(ValueError):
    pass


def alpha_count(kind: str, n: int, p: int) -> int:
    if kind == "A":
        return (n - p) // 2 - 1
    if kind == "B":
        return (n - p - 3) // 2
    return 0


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    n: int
    p: int | None = None
    alphas: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(x) for x in self.alphas))

    def validate(self) -> "ModelSpec":
        k, n, p = self.kind, self.n, self.p
        if k not in KINDS:
            raise InvalidSpec(f"unknown kind {k!r}")
        if k in ("L", "Q"):
            if p is not None or self.alphas:
                raise InvalidSpec(f"{k}_n takes no p or alphas")
            if k == "L" and n < 3:
                raise InvalidSpec("L_n needs n >= 3")
            if k == "Q" and (n % 2 or n < 6):
                raise InvalidSpec("Q_n needs n = 2m with m >= 3")
            return self
        if p is None:
            raise InvalidSpec(f"{k}_n^p needs p")
        if k == "A" and not (n >= 4 and 1 <= p <= n - 4):
            raise InvalidSpec("A_n^p needs n >= 4 and 1 <= p <= n-4")
        if k == "B" and not (n % 2 == 0 and n >= 6 and 1 <= p <= n - 5):
            raise InvalidSpec("B_n^p needs n = 2m, m >= 3 and 1 <= p <= n-5")
        t = alpha_count(k, n, p)
        if len(self.alphas) != t:
            raise InvalidSpec(f"{k}_{n}^{p} takes exactly {t} alpha(s), got {len(self.alphas)}")
        return self

    @property
    def rank(self) -> int:
        return 2 if self.kind in ("L", "Q") else 1

    @property
    def quasi_adapted(self) -> bool:
        return self.kind in ("Q", "B")

    def label(self) -> str:
        if self.kind in ("L", "Q"):
            return f"{self.kind}_{self.n}"
        al = ",".join(str(a) for a in self.alphas)
        return f"{self.kind}_{self.n}^{self.p}({al})"


def coeff_table(p: int, alphas, n: int, kind: str = "A") -> dict[tuple[int, int], Fraction]:
    """The coefficients ``a_{i,j}`` (1-based, ``i <= j``) used by the A/B bracket tables.

    Determined by ``a_{i,i} = 0``, ``a_{i,i+1} = alpha_i`` and
    ``a_{i,j} = a_{i+1,j} + a_{i,j+1}``, on the index range the brackets use:
    ``i + j <= n-p-1`` for kind A and ``i + j <= n-p-2`` for kind B.
    """
    if kind not in ("A", "B"):
        raise InvalidSpec("coefficient tables exist for kinds A and B only")
    ModelSpec(kind, n, p, tuple(alphas)).validate()
    alphas = [Fraction(x) for x in alphas]
    bound = n - p - 1 if kind == "A" else n - p - 2
    a: dict[tuple[int, int], Fraction] = {}
    for gap in range(0, bound):
        for i in range(1, bound):
            j = i + gap
            if i + j > bound:
                break
            if gap == 0:
                a[i, j] = Fraction(0)
            elif gap == 1:
                a[i, j] = alphas[i - 1]
            else:
                a[i, j] = a[i, j - 1] - a[i + 1, j - 1]
    return a


def make_model(spec: ModelSpec, check: bool = True) -> LieAlgebra:
    spec.validate()
    kind, n, p = spec.kind, spec.n, spec.p
    table: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i, j, k, c):  # 1-based indices
        if c:
            table.setdefault((i - 1, j - 1), {})[k - 1] = Fraction(c)

    if kind in ("L", "A"):
        for i in range(2, n):
            put(1, i, i + 1, 1)
    else:
        for i in range(2, n - 1):
            put(1, i, i + 1, 1)
        for i in range(2, n // 2 + 1):
            put(i, n - i + 1, n, (-1) ** (i + 1))
    if kind in ("A", "B"):
        a = coeff_table(p, spec.alphas, n, kind)
        top = n - p + 1 if kind == "A" else n - p
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                if i + j <= top:
                    put(i, j, i + j + p - 1, a[i - 1, j - 1])
    name = "Y" if spec.quasi_adapted else "X"
    return LieAlgebra(n, table, labels=[f"{name}{i}" for i in range(1, n + 1)], check=check)


def L(n):
    return make_model(ModelSpec("L", n))


def Q(n):
    return make_model(ModelSpec("Q", n))


def A(n, p, alphas):
    return make_model(ModelSpec("A", n, p, tuple(alphas)))


def B(n, p, alphas):
    return make_model(ModelSpec("B", n, p, tuple(alphas)))


# ---------------------------------------------------------------------------
# adapted bases
# ---------------------------------------------------------------------------

def adapted_basis_defects(a: LieAlgebra) -> list[str]:
    """Conditions of an adapted basis that fail for the current basis of ``a``."""
    from .lie import lower_central_series

    n = a.dim
    bad = []
    for i in range(1, n - 1):
        if a.bracket_basis(0, i) != {i + 1: 1}:
            bad.append(f"[X1,X{i + 1}] != X{i + 2}")
    if n >= 3 and any(k < 4 for k in a.bracket_basis(1, 2)):
        bad.append("[X2,X3] has components below X5")
    alpha = None
    for i in range(1, n):
        j = n - i - 1
        if j <= i:
            break
        v = a.bracket_basis(i, j)
        if any(k != n - 1 for k in v):
            bad.append(f"[X{i + 1},X{j + 1}] not a multiple of X{n}")
            continue
        c = v.get(n - 1, Fraction(0)) * (-1) ** i  # (-1)^{(i+1)+1} in 1-based terms
        if alpha is None:
            alpha = c
        elif c != alpha:
            bad.append(f"[X{i + 1},X{j + 1}] breaks the common alpha")
    if n % 2 and alpha:
        bad.append("alpha must vanish in odd dimension")
    series = lower_central_series(a)
    for k in range(2, len(series) + 1):
        want = set(range(k, n))
        if k - 1 < len(series) and set(series[k - 1].pivots()) != want:
            bad.append(f"g^{k} is not spanned by X{k + 1}..X{n}")
    return bad


def quasi_to_adapted(a: LieAlgebra) -> list[list[Fraction]]:
    """Change-of-basis matrix (columns: adapted vectors in current coordinates).

    Already-adapted input gives the identity.  Otherwise ``X1 = Y1 - Y2``,
    ``X2 = Y2`` and ``X_{i+1} = [X1, X_i]``; for Q_n this is the identity on
    ``X2 .. Xn``, for B_n^p with nonzero alphas the thread picks up
    corrections in higher degree.
    """
    from .lie import change_basis

    n = a.dim
    if not adapted_basis_defects(a):
        return linalg.identity(n, Fraction(1))
    x1 = [Fraction(0)] * n
    x1[0], x1[1] = Fraction(1), Fraction(-1)
    cols = [tuple(x1), a.basis_vector(1)]
    for _ in range(2, n):
        cols.append(a.bracket(cols[0], cols[-1]))
    m = linalg.transpose([list(c) for c in cols])
    if linalg.det(m) == 0:
        raise ValueError("X1 = Y1 - Y2 does not generate an adapted basis")
    bad = adapted_basis_defects(change_basis(a, m))
    if bad:
        raise ValueError("basis change does not give an adapted basis: " + "; ".join(bad))
    return m


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def torus_automorphism(spec: ModelSpec, u, t=None) -> list[list[Fraction]]:
    """Diagonal element of the standard maximal torus (current basis)."""
    n = spec.n
    u = Fraction(u)
    if spec.kind in ("A", "B"):
        t = u ** (spec.p + 1)
    t = Fraction(t)
    d = [u] + [u ** (i - 2) * t for i in range(2, n + 1)]
    if spec.quasi_adapted:
        d[n - 1] = u ** (n - 3) * t ** 2
    m = linalg.identity(n, Fraction(1))
    for i in range(n):
        m[i][i] = d[i]
    return m


def automorphism_from_generators(a: LieAlgebra, x1, x2) -> list[list[Fraction]]:
    """Extend ``e0 -> x1, e1 -> x2`` along the thread ``e_{i+1} = [e0, e_i]``.

    Only meaningful for tables whose basis satisfies ``[e0, e_i] = e_{i+1}``
    for ``1 <= i <= n-2``.  Raises if the extension is not an automorphism.
    """
    cols = [tuple(map(Fraction, x1)), tuple(map(Fraction, x2))]
    for _ in range(2, a.dim):
        cols.append(a.bracket(cols[0], cols[-1]))
    m = linalg.transpose([list(c) for c in cols])
    if not is_automorphism(a, m):
        raise ValueError("generator images do not extend to an automorphism")
    return m


# ---------------------------------------------------------------------------
# named examples of rank zero
# ---------------------------------------------------------------------------

def n74() -> LieAlgebra:
    """The 7-dimensional characteristically nilpotent filiform algebra n_{7,4}."""
    t = {}
    for i in range(2, 7):
        t[(0, i - 1)] = {i: 1}
    t[(1, 2)] = {5: -1}   # [X2,X3] = -X6
    t[(1, 3)] = {6: -1}   # [X2,X4] = -X7
    t[(4, 1)] = {6: 1}    # [X5,X2] = X7
    t[(2, 3)] = {6: 1}    # [X3,X4] = X7
    return LieAlgebra(7, t, labels=[f"X{i}" for i in range(1, 8)])


def n74_automorphism(a2, a3, a4, a5, a6, a7, b3, b5, b6, b7) -> list[list[Fraction]]:
    """The unipotent automorphism of n_{7,4} with the given free parameters."""
    F = Fraction
    x1 = [F(1), F(a2), F(a3), F(a4), F(a5), F(a6), F(a7)]
    x2 = [F(0), F(1), F(b3), (F(b3) ** 2 - F(a2)) / 2, F(b5), F(b6), F(b7)]
    return automorphism_from_generators(n74(), x1, x2)


def dixmier_lister() -> LieAlgebra:
    """The 8-dimensional characteristically nilpotent algebra of Dixmier and Lister."""
    pairs = {
        (1, 2): (5, 1), (1, 3): (6, 1), (1, 4): (7, 1), (1, 5): (8, -1),
        (2, 3): (8, 1), (2, 4): (6, 1), (2, 6): (7, -1), (3, 4): (5, -1),
        (3, 5): (7, -1), (4, 6): (8, -1),
    }
    t = {(i - 1, j - 1): {k - 1: c} for (i, j), (k, c) in pairs.items()}
    return LieAlgebra(8, t, labels=[f"X{i}" for i in range(1, 9)])


def dixmier_lister_sigma() -> list[list[Fraction]]:
    """The order-two automorphism swapping X1<->X5, X2<->X7, X4<->X8 and negating X3, X6."""
    images = {1: (5, 1), 5: (1, 1), 2: (7, 1), 7: (2, 1), 4: (8, 1), 8: (4, 1), 3: (3, -1), 6: (6, -1)}
    m = [[Fraction(0)] * 8 for _ in range(8)]
    for src, (dst, c) in images.items():
        m[dst - 1][src - 1] = Fraction(c)
    return m


def default_alphas(kind: str, n: int, p: int) -> tuple:
    """A Jacobi-consistent parameter choice with some alpha nonzero, when one is easy to find.

    Tries all ones, each unit vector, then small integer vectors (t <= 3);
    falls back to all zeros.
    """
    t = alpha_count(kind, n, p)
    if t <= 0:
        return ()
    candidates = [(1,) * t] + [tuple(int(i == j) for j in range(t)) for i in range(t)]
    if t <= 3:
        grid = [c for c in itertools.product(range(-2, 3), repeat=t) if any(c)]
        candidates += sorted(grid, key=lambda c: (sum(map(abs, c)), [-x for x in c]))
    for alphas in candidates:
        try:
            make_model(ModelSpec(kind, n, p, alphas))
            return tuple(Fraction(x) for x in alphas)
        except ValueError:
            continue
    return (Fraction(0),) * t
