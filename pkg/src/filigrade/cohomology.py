"""2-cochains on L_{n+1}, the cocycles psi_{k,s}, and the deformations mu_0 + psi.

Here L_{n+1} has basis e_0 .. e_n with [e_0, e_i] = e_{i+1} for 1 <= i <= n-1
(the index convention of the deformation-theoretic literature; e_0 plays the
role of X_1).  Its natural Z-grading puts e_0, e_1 in degree 1 and e_i in
degree i, and a cochain has weight p when it raises degree by p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import linalg
from .gradings import Grading, NotAGrading, verify_grading
from .groups import FGAbelianGroup
from .lie import LieAlgebra, NotFiliform, change_basis, is_filiform


class NotACocycle(ValueError):
    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"not a 2-cocycle: d(phi) is nonzero on {len(residual)} triple(s)")


@dataclass(frozen=True)
class Cochain2:
    dim: int
    values: dict = field(default_factory=dict)  # (i, j), i < j -> {k: Fraction}

    def __post_init__(self):
        clean = {}
        for (i, j), vec in self.values.items():
            if i == j:
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            acc = clean.setdefault((i, j), {})
            for k, c in vec.items():
                acc[k] = acc.get(k, 0) + sign * Fraction(c)
        clean = {key: {k: c for k, c in v.items() if c} for key, v in clean.items()}
        object.__setattr__(self, "values", {key: v for key, v in sorted(clean.items()) if v})

    def __call__(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return dict(self.values.get((i, j), {}))
        return {k: -c for k, c in self.values.get((j, i), {}).items()}

    def __add__(self, other: "Cochain2") -> "Cochain2":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        vals = {key: dict(v) for key, v in self.values.items()}
        for key, v in other.values.items():
            acc = vals.setdefault(key, {})
            for k, c in v.items():
                acc[k] = acc.get(k, 0) + c
        return Cochain2(self.dim, vals)

    def scale(self, c) -> "Cochain2":
        c = Fraction(c)
        return Cochain2(self.dim, {key: {k: c * x for k, x in v.items()} for key, v in self.values.items()})

    def is_zero(self) -> bool:
        return not self.values

    def weight(self) -> int | None:
        """The common weight of all values in the natural grading, if there is one."""
        ws = {_deg(k) - _deg(i) - _deg(j) for (i, j), v in self.values.items() for k in v}
        return ws.pop() if len(ws) == 1 else None


def _deg(i: int) -> int:
    return 1 if i == 0 else i


def zero_cochain(dim: int) -> Cochain2:
    return Cochain2(dim, {})


def mu0(n: int) -> LieAlgebra:
    """L_{n+1} on e_0 .. e_n."""
    return LieAlgebra(n + 1, {(0, i): {i + 1: 1} for i in range(1, n)},
                      labels=[f"e{i}" for i in range(n + 1)])


def psi(n: int, k: int, s: int) -> Cochain2:
    """The cocycle psi_{k,s} of weight s - 2k - 1 on L_{n+1}."""
    if not (1 <= k <= n - 1 and 2 * k <= s <= n):
        raise ValueError(f"psi_{{{k},{s}}} needs 1 <= k <= n-1 and 2k <= s <= n (n = {n})")
    vals = {(k, k + 1): {s: 1}}
    for i in range(1, k + 1):
        for j in range(k + 2, n + 1):
            r = i + j - 2 * k - 1
            if not 0 <= r <= n - s:
                continue
            c = (-1) ** (k - i) * comb(j - k - 1, k - i)
            if c:
                vals[(i, j)] = {i + j + s - 2 * k - 1: c}
    return Cochain2(n + 1, vals)


def psi_weight(k: int, s: int) -> int:
    return s - 2 * k - 1


def f1_basis_indices(n: int) -> list[tuple[int, int]]:
    """(k, s) with 1 <= k <= [n/2]-1 and max(4, 2k+2) <= s <= n (weight >= 1)."""
    return [(k, s) for k in range(1, n // 2) for s in range(max(4, 2 * k + 2), n + 1)]


def expansion_indices(n: int) -> list[tuple[int, int]]:
    """The cocycles spanning the normal forms of (n+1)-dimensional filiform algebras:
    the weight >= 1 basis, plus psi_{(n-1)/2, n} when n is odd."""
    idx = f1_basis_indices(n)
    if n % 2:
        idx.append(((n - 1) // 2, n))
    return idx


def combination(n: int, terms) -> Cochain2:
    """sum c * psi_{k,s} over ``terms = [(k, s, c), ...]``."""
    out = zero_cochain(n + 1)
    for k, s, c in terms:
        out = out + psi(n, k, s).scale(c)
    return out


# ---------------------------------------------------------------------------
# the Chevalley-Eilenberg differential
# ---------------------------------------------------------------------------

def _act(a: LieAlgebra, i: int, vec: dict) -> dict:
    """[e_i, vec]."""
    out: dict = {}
    for t, c in vec.items():
        for k, x in a.bracket_basis(i, t).items():
            out[k] = out.get(k, 0) + c * x
    return out


def _apply(phi: Cochain2, vec: dict, j: int) -> dict:
    """phi(vec, e_j)."""
    out: dict = {}
    for t, c in vec.items():
        for k, x in phi(t, j).items():
            out[k] = out.get(k, 0) + c * x
    return out


def ce_d2(mu: LieAlgebra, phi: Cochain2) -> dict:
    """Nonzero values of d(phi) on basis triples i < j < l.

    d(phi)(x,y,z) = [x,phi(y,z)] - [y,phi(x,z)] + [z,phi(x,y)]
                    - phi([x,y],z) + phi([x,z],y) - phi([y,z],x).
    """
    n = mu.dim
    if phi.dim != n:
        raise ValueError("dimension mismatch between algebra and cochain")
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                acc: dict = {}
                parts = [
                    (1, _act(mu, i, phi(j, l))),
                    (-1, _act(mu, j, phi(i, l))),
                    (1, _act(mu, l, phi(i, j))),
                    (-1, _apply(phi, mu.bracket_basis(i, j), l)),
                    (1, _apply(phi, mu.bracket_basis(i, l), j)),
                    (-1, _apply(phi, mu.bracket_basis(j, l), i)),
                ]
                for sign, vec in parts:
                    for k, c in vec.items():
                        acc[k] = acc.get(k, 0) + sign * c
                acc = {k: c for k, c in acc.items() if c}
                if acc:
                    out[(i, j, l)] = acc
    return out


def is_cocycle(mu: LieAlgebra, phi: Cochain2) -> bool:
    return not ce_d2(mu, phi)


def deform(mu: LieAlgebra, phi: Cochain2, labels=None) -> LieAlgebra:
    """The algebra with bracket mu + phi; rejects non-cocycles and Jacobi failures."""
    res = ce_d2(mu, phi)
    if res:
        raise NotACocycle(res)
    table = {}
    for (i, j), terms in mu.constants.items():
        table[(i, j)] = {k: c for k, c in terms}
    for (i, j), vec in phi.values.items():
        acc = table.setdefault((i, j), {})
        for k, c in vec.items():
            acc[k] = acc.get(k, 0) + c
    return LieAlgebra(mu.dim, table, labels=labels or mu.labels, check=True)


def deform_terms(n: int, terms) -> LieAlgebra:
    """mu_0 + sum c psi_{k,s} on L_{n+1}."""
    return deform(mu0(n), combination(n, terms))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def dim9_family_terms(alpha):
    alpha = Fraction(alpha)
    if alpha in (0, -2):
        raise ValueError("alpha must differ from 0 and -2")
    return [(1, 4, 1), (2, 6, alpha), (2, 8, 1), (3, 8, 3 * alpha ** 2 / (alpha + 2))]


def dim9_family(alpha) -> LieAlgebra:
    return deform_terms(8, dim9_family_terms(alpha))


def zk_family_terms(k: int):
    return [(1, 4, 1), (1, 4 + k, 1)]


def zk_family(k: int) -> LieAlgebra:
    """mu_0 + psi_{1,4} + psi_{1,4+k}, of dimension k + 5."""
    if k < 1:
        raise ValueError("k must be positive")
    return deform_terms(k + 4, zk_family_terms(k))


# Normal forms of the characteristically nilpotent filiform algebras of
# dimensions 7 and 8 as (k, s, coefficient) lists; entries written as a
# string name a free coefficient, to be supplied by the caller.
CN_FORMS = {
    7: {
        "a": [(1, 5, 1), (1, 6, 1)],
        "b": [(1, 4, 1), (1, 6, 1)],
        "c": [(1, 5, 1), (2, 6, 1)],
    },
    8: {
        "a": [(1, 4, 1), (1, 5, "a15"), (2, 6, "-a26"), (3, 7, 1)],
        "b": [(1, 5, 1), (1, 6, "a16"), (3, 7, 1)],
        "c": [(1, 4, "a14"), (2, 6, 1), (2, 7, 1)],
        "d": [(1, 5, 1), (2, 6, 1)],
        "e": [(1, 4, 1), (1, 6, "a16"), (2, 7, 1)],
        "f": [(1, 5, "a15"), (1, 6, 1), (2, 7, 1)],
        "g": [(1, 4, "a14"), (1, 6, 1), (1, 7, 1)],
        "h": [(1, 4, 1), (1, 6, 1)],
        "i": [(1, 4, 1), (1, 7, 1)],
        "j": [(1, 5, 1), (1, 6, 1)],
    },
}


def cn_form_terms(dim: int, label: str, **params):
    out = []
    for k, s, c in CN_FORMS[dim][label]:
        if isinstance(c, str):
            name = c.lstrip("-")
            if name not in params:
                raise KeyError(f"form {dim}({label}) needs the coefficient {name}")
            c = -Fraction(params[name]) if c.startswith("-") else Fraction(params[name])
        out.append((k, s, c))
    return out


# parameter values making every form above a characteristically nilpotent Lie algebra
CN_FORM_DEFAULTS = {
    (8, "a"): {"a15": 1, "a26": 2},
    (8, "b"): {"a16": 1},
    (8, "c"): {"a14": 1},
    (8, "e"): {"a16": 1},
    (8, "f"): {"a15": 1},
    (8, "g"): {"a14": 1},
}


def cn_form(dim: int, label: str, **params) -> LieAlgebra:
    values = dict(CN_FORM_DEFAULTS.get((dim, label), {}))
    values.update(params)
    return deform_terms(dim - 1, cn_form_terms(dim, label, **values))


def _witness(n, special=None):
    special = special or {}
    return {ks: Fraction(special.get(ks, 1)) for ks in expansion_indices(n)}


# coefficients, all nonzero, on every psi of the expansion list satisfying Jacobi;
# keyed by the dimension n + 1
EXPANSION_WITNESSES = {
    7: _witness(6),
    8: _witness(7, {(2, 6): -2}),
    9: _witness(8),
    10: _witness(9, {(3, 9): Fraction(4, 3)}),
}


def expansion_witness(dim: int) -> LieAlgebra:
    terms = [(k, s, c) for (k, s), c in sorted(EXPANSION_WITNESSES[dim].items())]
    return deform_terms(dim - 1, terms)


# ---------------------------------------------------------------------------
# sill algebras
# ---------------------------------------------------------------------------

def _shape(a: LieAlgebra) -> str:
    """'L' or 'Q' for tables in the normal form [e_0, e_i] = e_{i+1} + deformation."""
    n = a.dim - 1
    q_terms = any(k == i + j for (i, j), terms in a.constants.items() if i >= 1 for k, _ in terms)
    top = n - 2 if q_terms else n - 1
    for i in range(1, top + 1):
        if a.bracket_basis(0, i) != {i + 1: 1}:
            raise ValueError("the table is not in the form [e0, e_i] = e_{i+1}")
    if q_terms and a.bracket_basis(0, n - 1) not in ({}, {n: 1}):
        raise ValueError("[e0, e_{n-1}] must be 0 or e_n")
    for (i, j), terms in a.constants.items():
        if i >= 1 and any(k < i + j for k, _ in terms):
            raise ValueError("a bracket [e_i, e_j] has terms below e_{i+j}")
    return "Q" if q_terms else "L"


def q_normal_form(a: LieAlgebra) -> LieAlgebra:
    """Rewrite mu_0 + psi (with psi_{(n-1)/2, n} present) so that [Z_0, Z_{n-1}] = 0.

    Uses Z_0 = e_0 + (-1)^m e_1 with m = (n-1)/2, Z_1 = e_1, Z_{i+1} = [Z_0, Z_i]
    for i <= n-2 and Z_n = e_n.
    """
    N = a.dim
    n = N - 1
    if _shape(a) != "Q":
        raise ValueError("the table has no weight-0 part")
    if not a.bracket_basis(0, n - 1):
        return a
    z0 = [Fraction(0)] * N
    z0[0], z0[1] = Fraction(1), Fraction((-1) ** ((n - 1) // 2))
    cols = [tuple(z0), a.basis_vector(1)]
    for _ in range(1, n - 1):
        cols.append(a.bracket(cols[0], cols[-1]))
    cols.append(a.basis_vector(n))
    b = change_basis(a, linalg.transpose([list(c) for c in cols]), labels=[f"Z{i}" for i in range(N)])
    if b.bracket_basis(0, n - 1):
        raise ValueError("could not reach the normal form [Z0, Z_{n-1}] = 0")
    return b


def sill_algebra(a: LieAlgebra) -> LieAlgebra:
    """Truncate the deformation terms [e_i, e_j] = sum_r a^r_ij e_{i+j+r} to the least r >= 1.

    Tables whose graded algebra is of Q type (terms with r = 0 present) are
    first brought to the form [Z_0, Z_{n-1}] = 0 by :func:`q_normal_form`.
    Their thread and r = 0 part are kept; if some deformation term lands on
    e_n only the e_n components are kept, otherwise the least r >= 1.
    """
    if not is_filiform(a)[0]:
        raise NotFiliform("sill algebras are defined for filiform algebras")
    shape = _shape(a)
    if shape == "Q":
        a = q_normal_form(a)
    n = a.dim - 1
    thread = {(0, i): a.bracket_basis(0, i) for i in range(1, n)}
    rest = [(i, j, k, c) for (i, j), terms in a.constants.items() if i >= 1 for k, c in terms]
    keep = [(i, j, k, c) for i, j, k, c in rest if k == i + j]  # Q-type part
    deform_terms_ = [(i, j, k, c) for i, j, k, c in rest if k > i + j]
    if shape == "Q" and any(k == n for _, _, k, _ in deform_terms_):
        keep += [t for t in deform_terms_ if t[2] == n]
    elif deform_terms_:
        r = min(k - i - j for i, j, k, _ in deform_terms_)
        keep += [t for t in deform_terms_ if t[2] - t[0] - t[1] == r]
    table = {key: dict(v) for key, v in thread.items()}
    for i, j, k, c in keep:
        table.setdefault((i, j), {})[k] = c
    return LieAlgebra(a.dim, table, labels=a.labels, check=True)


def deformation_weights(a: LieAlgebra) -> set[int]:
    """The r = k - i - j over all terms of [e_i, e_j], i, j >= 1."""
    return {k - i - j for (i, j), terms in a.constants.items() if i >= 1 for k, _ in terms}


# ---------------------------------------------------------------------------
# Z_2 and Z_k gradings of characteristically nilpotent deformations
# ---------------------------------------------------------------------------

def _two_block_z2(a: LieAlgebra, block_a, block_b, name) -> Grading:
    z2 = FGAbelianGroup(0, (2,))
    for da, db in ((0, 1), (1, 0)):
        degrees = [None] * a.dim
        for i in block_a:
            degrees[i] = (da,)
        for i in block_b:
            degrees[i] = (db,)
        g = Grading(a, z2, tuple(degrees), name)
        if verify_grading(g) is None:
            return g
    raise NotAGrading(f"decomposition {name} is not a Z_2-grading")


def q_rebased(a: LieAlgebra) -> LieAlgebra:
    """The same algebra on the basis e_0 + e_1, e_1, ..., e_n."""
    n = a.dim
    m = linalg.identity(n, Fraction(1))
    m[1][0] = Fraction(1)
    labels = ["e0+e1"] + list(a.labels[1:])
    return change_basis(a, m, labels=labels)


def cn_z2_grading(a: LieAlgebra, parity: str, decomposition: int = 1) -> Grading:
    """The two-component decompositions of (n+1)-dimensional deformations.

    ``even``: <e_1, e_3, ...> + <e_0, e_2, ...> (all psi_{k,s} with s even).
    ``odd``:  <e_2, e_4, ...> + <e_0, e_1, e_3, ...> (all s odd).
    ``q_type``: the three decompositions for tables containing psi_{(n-1)/2, n}:
      1: <e_2, e_4, ..., e_{n-1}> + <e_0, e_1, e_3, ..., e_n>
      2: <e_0 + e_1, e_n> + <e_1, ..., e_{n-1}>
      3: <e_1, e_3, ..., e_{n-2}> + <e_0 + e_1, e_2, e_4, ..., e_{n-1}, e_n>
    Decompositions 2 and 3 are returned on the basis e_0 + e_1, e_1, ..., e_n.
    """
    n = a.dim - 1
    if parity in ("even", "odd"):
        ws = deformation_weights(a)
        want = 1 if parity == "even" else 0
        if any(w % 2 != want for w in ws):
            raise ValueError(f"the deformation terms do not all have {parity} s")
        odd = [i for i in range(1, n + 1, 2)]
        even = [0] + [i for i in range(2, n + 1, 2)]
        if parity == "even":
            return _two_block_z2(a, odd, even, "Z2-even")
        return _two_block_z2(a, even[1:], [0] + odd, "Z2-odd")
    if parity != "q_type":
        raise ValueError("parity must be 'even', 'odd' or 'q_type'")
    if n % 2 == 0:
        raise ValueError("the Q-type decompositions need n odd")
    if decomposition == 1:
        return _two_block_z2(a, list(range(2, n, 2)), [0, 1] + list(range(3, n + 1, 2)), "Z2-q1")
    b = q_rebased(a)
    if decomposition == 2:
        return _two_block_z2(b, [0, n], list(range(1, n)), "Z2-q2")
    if decomposition == 3:
        return _two_block_z2(b, list(range(1, n - 1, 2)), [0] + list(range(2, n, 2)) + [n], "Z2-q3")
    raise ValueError("decomposition must be 1, 2 or 3")


def cn_zk_grading(a: LieAlgebra, k: int) -> Grading:
    """Z_k-grading d(e_0) = 1, d(e_i) = i + w for deformations whose weights all equal w mod k."""
    n = a.dim - 1
    if k <= 2:
        raise ValueError("k must exceed 2")
    if not k < n - 2:
        raise ValueError(f"k must be smaller than n - 2 = {n - 2}")
    _shape(a)
    ws = {w % k for w in deformation_weights(a)}
    if len(ws) > 1:
        raise NotAGrading(f"deformation weights are not congruent mod {k}: {sorted(deformation_weights(a))}")
    w = ws.pop() if ws else 0
    zk = FGAbelianGroup(0, (k,))
    degrees = ((1,),) + tuple(((i + w) % k,) for i in range(1, n + 1))
    g = Grading(a, zk, degrees, f"Z{k}")
    v = verify_grading(g)
    if v is not None:
        raise NotAGrading(f"[e{v.i}, e{v.j}] breaks the Z_{k} degrees")
    return g


# ---------------------------------------------------------------------------
# weight decomposition of H^2(L_{n+1}, L_{n+1})
# ---------------------------------------------------------------------------

def _c2_weight_basis(n: int, p: int) -> list[tuple[int, int, int]]:
    out = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            t = _deg(i) + _deg(j) + p
            for k in range(n + 1):
                if _deg(k) == t:
                    out.append((i, j, k))
    return out


def _c1_weight_basis(n: int, p: int) -> list[tuple[int, int]]:
    return [(i, k) for i in range(n + 1) for k in range(n + 1) if _deg(k) == _deg(i) + p]


def _coboundary(mu: LieAlgebra, f: dict) -> Cochain2:
    """(df)(x, y) = [x, f(y)] - [y, f(x)] - f([x, y]) for f given as {i: {k: c}}."""
    n = mu.dim
    vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            acc: dict = {}
            for k, c in _act(mu, i, f.get(j, {})).items():
                acc[k] = acc.get(k, 0) + c
            for k, c in _act(mu, j, f.get(i, {})).items():
                acc[k] = acc.get(k, 0) - c
            for t, c in mu.bracket_basis(i, j).items():
                for k, x in f.get(t, {}).items():
                    acc[k] = acc.get(k, 0) - c * x
            if any(acc.values()):
                vals[(i, j)] = acc
    return Cochain2(n, vals)


def _coords(phi: Cochain2, index: dict) -> dict:
    out = {}
    for (i, j), vec in phi.values.items():
        for k, c in vec.items():
            key = index.get((i, j, k))
            if key is None:
                raise ValueError("cochain has a value outside the given weight")
            out[key] = c
    return out


@dataclass(frozen=True)
class WeightSpace:
    weight: int
    cochains: int
    cocycles: int
    coboundaries: int

    @property
    def cohomology(self) -> int:
        return self.cocycles - self.coboundaries


def weight_space(n: int, p: int) -> WeightSpace:
    mu = mu0(n)
    basis = _c2_weight_basis(n, p)
    index = {b: t for t, b in enumerate(basis)}
    # cocycle condition: linear in the coordinates of phi
    rows: dict = {}
    for t, (i, j, k) in enumerate(basis):
        res = ce_d2(mu, Cochain2(n + 1, {(i, j): {k: 1}}))
        for tri, vec in res.items():
            for kk, c in vec.items():
                rows.setdefault((tri, kk), {})[t] = c
    z = len(basis) - linalg.rank(list(rows.values())) if rows else len(basis)
    images = [_coords(_coboundary(mu, {i: {k: Fraction(1)}}), index) for i, k in _c1_weight_basis(n, p)]
    return WeightSpace(p, len(basis), z, linalg.rank(images) if images else 0)


def h2_weight_dims(n: int, weights=None) -> dict[int, int]:
    """dim H^2_p(L_{n+1}, L_{n+1}) for each weight p (default: 1 .. n)."""
    if n < 4:
        raise ValueError("n must be at least 4")
    weights = range(1, n + 1) if weights is None else weights
    return {p: weight_space(n, p).cohomology for p in weights}


def psi_classes_independent(n: int, indices=None) -> bool:
    """Whether the given psi_{k,s} are independent modulo coboundaries (weight by weight)."""
    mu = mu0(n)
    indices = f1_basis_indices(n) if indices is None else list(indices)
    by_weight: dict = {}
    for k, s in indices:
        by_weight.setdefault(psi_weight(k, s), []).append((k, s))
    for p, group in by_weight.items():
        basis = _c2_weight_basis(n, p)
        index = {b: t for t, b in enumerate(basis)}
        bounds = [_coords(_coboundary(mu, {i: {k: Fraction(1)}}), index) for i, k in _c1_weight_basis(n, p)]
        rb = linalg.rank(bounds) if bounds else 0
        vecs = [_coords(psi(n, k, s), index) for k, s in group]
        if linalg.rank(bounds + vecs) != rb + len(vecs):
            return False
    return True
