"""Basis-homogeneous group gradings of Lie algebras.

A grading assigns to every basis vector a degree in a finitely generated
abelian group; the components are the spans of basis vectors sharing a
degree.  For the filiform models of nonzero rank every grading is, up to
equivalence, of this form (a coarsening of the standard grading in an
adapted or quasi-adapted basis), which is what makes the enumeration below
finite and exact.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple

from . import linalg
from .catalog import ModelSpec, make_model
from .groups import FGAbelianGroup, Quotient, cyclic_product, group_quotient, quotient
from .lie import LieAlgebra, NotFiliform, Subspace, is_filiform, lower_central_series

Partition = tuple  # sorted tuple of sorted index tuples


@dataclass(frozen=True)
class Grading:
    algebra: LieAlgebra
    group: FGAbelianGroup
    degrees: tuple
    name: str | None = None

    def __post_init__(self):
        if len(self.degrees) != self.algebra.dim:
            raise ValueError("one degree per basis vector is required")
        object.__setattr__(self, "degrees", tuple(self.group.reduce(d) for d in self.degrees))

    def components(self) -> dict:
        out: dict = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {d: tuple(v) for d, v in out.items()}

    def partition(self) -> Partition:
        return partition_key(self.components().values())

    @property
    def support(self) -> list:
        return sorted(self.components())

    def __len__(self):
        return len(self.components())


def partition_key(blocks) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


class Violation(NamedTuple):
    i: int
    j: int
    witness: int  # basis index of a term of [e_i, e_j] outside degree d_i + d_j


def verify_grading(g: Grading) -> Violation | None:
    """None when every basis bracket lands in the expected component."""
    a, grp, d = g.algebra, g.group, g.degrees
    for (i, j), terms in sorted(a.constants.items()):
        target = grp.add(d[i], d[j])
        for k, _ in terms:
            if d[k] != target:
                return Violation(i, j, k)
    return None


class NotAGrading(ValueError):
    pass


def _require(g: Grading):
    v = verify_grading(g)
    if v is not None:
        raise NotAGrading(f"not a grading: [e{v.i}, e{v.j}] has a term e{v.witness} of the wrong degree")


def _universal(a: LieAlgebra, blocks) -> tuple[FGAbelianGroup, tuple]:
    blocks = [tuple(b) for b in blocks]
    where = {i: c for c, b in enumerate(blocks) for i in b}
    rels = set()
    for (i, j), terms in a.constants.items():
        for k, _ in terms:
            row = [0] * len(blocks)
            row[where[i]] += 1
            row[where[j]] += 1
            row[where[k]] -= 1
            rels.add(tuple(row))
    q = quotient(len(blocks), sorted(rels))
    imgs = q.generator_images()
    return q.group, tuple(imgs[where[i]] for i in range(a.dim))


def universal_group(g: Grading) -> tuple[FGAbelianGroup, Grading]:
    """U(g) in canonical form and ``g`` re-expressed as a U(g)-grading."""
    _require(g)
    group, degrees = _universal(g.algebra, g.components().values())
    return group, Grading(g.algebra, group, degrees, g.name)


def grading_from_partition(a: LieAlgebra, blocks, name=None) -> Grading:
    """The universal grading whose components are spanned by ``blocks``."""
    blocks = [tuple(b) for b in blocks]
    if sorted(i for b in blocks for i in b) != list(range(a.dim)):
        raise ValueError("blocks must partition the basis")
    group, degrees = _universal(a, blocks)
    g = Grading(a, group, degrees, name)
    _require(g)
    if g.partition() != partition_key(blocks):
        raise NotAGrading("the relations force distinct blocks to share a degree")
    return g


# ---------------------------------------------------------------------------
# standard gradings and coarsening
# ---------------------------------------------------------------------------

def standard_degrees(spec: ModelSpec) -> tuple:
    n, p = spec.n, spec.p
    if spec.kind == "L":
        return ((1, 0),) + tuple((s - 2, 1) for s in range(2, n + 1))
    if spec.kind == "Q":
        return ((1, 0),) + tuple((s - 2, 1) for s in range(2, n)) + ((n - 3, 2),)
    if spec.kind == "A":
        return ((1,),) + tuple((s + p - 1,) for s in range(2, n + 1))
    return ((1,),) + tuple((s + p - 1,) for s in range(2, n)) + ((n + 2 * p - 1,),)


def standard_grading(spec: ModelSpec, algebra: LieAlgebra | None = None) -> Grading:
    spec.validate()
    a = algebra if algebra is not None else make_model(spec)
    g = Grading(a, FGAbelianGroup(spec.rank), standard_degrees(spec), "st")
    _require(g)
    return g


def coarsen(g: Grading, target: FGAbelianGroup, hom: Callable, name=None) -> Grading:
    """Push degrees forward along ``hom: g.group -> target``."""
    out = Grading(g.algebra, target, tuple(target.reduce(hom(d)) for d in g.degrees), name)
    _require(out)
    return out


def coarsen_by(g: Grading, generators, name=None) -> Grading:
    """The factor-grading by the canonical map ``G -> G / <generators>``."""
    q = group_quotient(g.group, generators)
    return coarsen(g, q.group, q.image, name)


def _closure_partition(degrees, q: Quotient) -> Partition:
    blocks: dict = {}
    for i, d in enumerate(degrees):
        blocks.setdefault(q.image(d), []).append(i)
    return partition_key(blocks.values())


def enumerate_factor_gradings(spec: ModelSpec, algebra: LieAlgebra | None = None) -> list[Grading]:
    """All factor-gradings of the standard grading, one per basis partition.

    Searches subgroups H of Z^r generated by differences of standard
    degrees.  The partition induced by H only depends on which differences
    H contains, so states are identified by partition and each state is
    extended by one more difference; this reaches every partition.
    """
    st = standard_grading(spec, algebra)
    a, r, degs = st.algebra, spec.rank, st.degrees
    diffs = sorted({tuple(x - y for x, y in zip(degs[i], degs[j]))
                    for i in range(len(degs)) for j in range(i + 1, len(degs))})
    start = _closure_partition(degs, quotient(r, []))
    seen = {start: ()}
    todo = deque([()])
    while todo:
        gens = todo.popleft()
        q = quotient(r, list(gens))
        for dlt in diffs:
            if not any(q.image(dlt)):
                continue
            new = gens + (dlt,)
            key = _closure_partition(degs, quotient(r, list(new)))
            if key not in seen:
                seen[key] = new
                todo.append(new)
    out = [grading_from_partition(a, key) for key in seen]
    out.sort(key=lambda g: (len(g.partition()), g.partition()), reverse=True)
    return out


# ---------------------------------------------------------------------------
# the classification tables
# ---------------------------------------------------------------------------

@dataclass
class Representative:
    name: str
    params: dict
    grading: Grading              # universal grading, built from the subgroup below
    subgroup: tuple               # generators of H < Z^r
    stated_group: FGAbelianGroup  # the universal group the theorem states
    literal_orders: tuple = ()    # cyclic orders (0 = Z) of the group the degrees are written in
    literal_degrees: tuple = ()
    literal_failures: list = field(default_factory=list)  # (i, j, k) triples
    note: str = ""

    @property
    def universal_group(self) -> FGAbelianGroup:
        return self.grading.group

    @property
    def group_agrees(self) -> bool:
        return self.grading.group == self.stated_group

    @property
    def literal_ok(self) -> bool:
        return not self.literal_failures

    def label(self) -> str:
        if not self.params:
            return self.name
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        if self.name.endswith("(m)"):
            return f"{self.name[:-3]}({args})"
        return f"{self.name}({args})"


@dataclass
class ClassificationTable:
    spec: ModelSpec
    representatives: list
    enumerated: list
    stated_totals: dict  # where the total is stated -> value

    @property
    def enumerated_count(self) -> int:
        return len(self.enumerated)

    @property
    def list_count(self) -> int:
        return len(self.representatives)

    def unlisted(self) -> list[Grading]:
        have = {r.grading.partition() for r in self.representatives}
        return [g for g in self.enumerated if g.partition() not in have]

    def missing(self) -> list[Representative]:
        have = {g.partition() for g in self.enumerated}
        return [r for r in self.representatives if r.grading.partition() not in have]

    def agreement(self) -> dict:
        out = {"list": self.list_count == self.enumerated_count}
        for where, value in self.stated_totals.items():
            out[where] = value == self.enumerated_count
        return out


def literal_failures(a: LieAlgebra, orders, degrees) -> list[tuple[int, int, int]]:
    """Triples violating additivity of degrees written in a product of cyclic groups."""
    def same(x, y):
        return all((u - v) % o == 0 if o else u == v for u, v, o in zip(x, y, orders))

    bad = []
    for (i, j), terms in sorted(a.constants.items()):
        s = tuple(u + v for u, v in zip(degrees[i], degrees[j]))
        for k, _ in terms:
            if not same(s, degrees[k]):
                bad.append((i, j, k))
    return bad


def stated_totals(spec: ModelSpec) -> dict:
    n, p = spec.n, spec.p
    if spec.kind == "L":
        return {"intro": (n - 1) * (n + 2) // 2, "theorem": (n - 1) * (n + 2) // 2}
    if spec.kind == "Q":
        return {"intro": (n - 1) * (n + 2) // 2 - 1, "theorem": (n - 1) * (n + 2) // 2 - 1}
    if spec.kind == "A":
        return {"intro": n + p - 1, "theorem": n + p - 2}
    return {"intro": n + p - 2, "theorem": n + p - 3}


def _rep_table(spec: ModelSpec):
    """(name, params, H, stated group orders, literal orders, literal degrees, note)."""
    n, p = spec.n, spec.p
    rows = []
    if spec.kind == "L":
        rows.append(("Gamma_st", {}, [], (0, 0), (0, 0), standard_degrees(spec), ""))
        for l in range(2, n + 1):
            lit = ((1,),) + tuple((i - l + 1,) for i in range(2, n + 1))
            rows.append(("Gamma_0^l", {"l": l}, [(l - 3, 1)], (0,), (0,), lit, ""))
        for k in range(1, n - 1):
            lit = ((1, 0),) + tuple((i - 2, 1) for i in range(2, n + 1))
            rows.append(("Gamma_k^0", {"k": k}, [(k, 0)], (k, 0), (k, 0), lit, ""))
        for k in range(1, n - 1):
            for l in range(2, k + 2):
                lit = ((1,),) + tuple((i - l + 1,) for i in range(2, n + 1))
                rows.append(("Gamma_k^l", {"k": k, "l": l}, [(k, 0), (l - 3, 1)], (k,), (k,), lit, ""))
    elif spec.kind == "A":
        rows.append(("Gamma_st", {}, [], (0,), (0,), standard_degrees(spec), ""))
        for m in range(1, n + p - 1):
            lit = ((1,),) + tuple((p + i - 1,) for i in range(2, n + 1))
            rows.append(("Gamma(m)", {"m": m}, [(m,)], (m,), (m,), lit, ""))
    elif spec.kind == "Q":
        rows.append(("Omega_st", {}, [], (0, 0), (0, 0), standard_degrees(spec), ""))
        lit = ((1, 0),) + tuple((i - 2, 1) for i in range(2, n)) + ((1, 0),)
        rows.append(("Omega(1,n)", {}, [(n - 4, 2)], (0, 2), (0, 2), lit, ""))
        for l in range(2, n + 1):
            lit = ((1,),) + tuple((i - l + 1,) for i in range(2, n)) + ((n - 2 * l + 3,),)
            rows.append(("Omega_0^l", {"l": l}, [(l - 3, 1)], (0,), (0,), lit, ""))
        for k in range(1, n - 2):
            lit = ((1, 0),) + tuple((i - 2, 1) for i in range(2, n)) + ((n - 3, 2),)
            rows.append(("Omega_k^0", {"k": k}, [(k, 0)], (k, 0), (k, 0), lit, ""))
        for k in range(1, n - 2):
            lit = ((1, 0),) + tuple((i - 2, 1) for i in range(2, n)) + ((1, 0),)
            rows.append(("Omega(1,n)_k", {"k": k}, [(k, 0), (n - 4, 2)], (k, 2), (k, 2), lit, ""))
        for k in range(1, n - 2):
            for l in range(2, k + 2):
                lit = ((1,),) + tuple((i - l + 1,) for i in range(2, n)) + ((n - 2 * l + 3,),)
                rows.append(("Omega_k^l", {"k": k, "l": l}, [(k, 0), (l - 3, 1)], (k,), (k,), lit, ""))
    else:
        lit_st = ((1,),) + tuple((p + i - 1,) for i in range(2, n)) + ((n + 2 * p - 2,),)
        rows.append(("Omega_st", {}, [], (0,), (0,), lit_st, ""))
        for m in range(1, n + p - 2):
            rows.append(("Omega(m)", {"m": m}, [(m,)], (m,), (m,), lit_st, ""))
        # the isolated member: d_1 = d_n.  With d_n = n+2p-1 this is m = n+2p-2;
        # the degrees as written (d_n = n+2p-2) give m = n+2p-3.
        m_lit = n + 2 * p - 3
        rows.append(("Omega(m)", {"m": m_lit}, [(n + 2 * p - 2,)], (m_lit,), (m_lit,), lit_st,
                     f"isolated member d_1 = d_n; realized with m = {n + 2 * p - 2}"))
    return rows


def classify(spec: ModelSpec, algebra: LieAlgebra | None = None) -> ClassificationTable:
    spec.validate()
    st = standard_grading(spec, algebra)
    a = st.algebra
    reps = []
    for name, params, h, stated, lit_orders, lit, note in _rep_table(spec):
        coarse = coarsen_by(st, h)
        _, g = universal_group(coarse)
        g = Grading(a, g.group, g.degrees, name)
        reps.append(Representative(
            name=name, params=params, grading=g, subgroup=tuple(map(tuple, h)),
            stated_group=cyclic_product(stated), literal_orders=tuple(lit_orders),
            literal_degrees=tuple(lit), literal_failures=literal_failures(a, lit_orders, lit),
            note=note))
    return ClassificationTable(spec, reps, enumerate_factor_gradings(spec, a), stated_totals(spec))


# ---------------------------------------------------------------------------
# invariants of equivalence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantTuple:
    dims: tuple                 # sorted component dimensions
    group: FGAbelianGroup       # U(g)
    characteristic_dims: tuple  # sorted dims of components containing a characteristic vector
    profiles: tuple             # sorted (dim C, dim C & g^2, dim C & g^3, ...) per component


def _has_characteristic_vector(a: LieAlgebra, block, rng, trials=3) -> bool:
    # ad(u)^{n-2} != 0 for generic u in the block, a polynomial condition:
    # random evaluation with a wide range is exact on success and fails to
    # detect a nonzero polynomial with negligible probability
    n = a.dim
    g2 = lower_central_series(a)[1]
    for _ in range(trials):
        u = [Fraction(0)] * n
        for i in block:
            u[i] = Fraction(rng.randint(-10**6, 10**6))
        if g2.contains(u):
            continue
        m = a.ad(u)
        power = linalg.identity(n, Fraction(1))
        for _ in range(n - 2):
            power = linalg.mat_mul(m, power)
        if any(any(row) for row in power):
            return True
    return False


def equivalence_invariants(g: Grading, seed: int = 0) -> InvariantTuple:
    _require(g)
    a = g.algebra
    if not is_filiform(a)[0]:
        raise NotFiliform("invariants are defined for filiform algebras")
    rng = random.Random(seed)
    series = lower_central_series(a)
    blocks = list(g.components().values())
    group, _ = _universal(a, blocks)
    char = tuple(sorted(len(b) for b in blocks if _has_characteristic_vector(a, b, rng)))
    profiles = []
    for b in blocks:
        sub = Subspace.span([a.basis_vector(i) for i in b], a.dim)
        profiles.append(tuple(sub.intersection_dim(s) for s in series))
    return InvariantTuple(tuple(sorted(len(b) for b in blocks)), group, char, tuple(sorted(profiles)))


def dixmier_lister_gamma(odd_plus: bool = False) -> Grading:
    """The displayed Z_2 decomposition of the Dixmier-Lister algebra.

    The algebra is rebased to X1+X5, X2+X7, X4+X8, X1-X5, X2-X7, X4-X8, X3, X6;
    the first three vectors get degree 0 (degree 1 when ``odd_plus``) and the
    rest the other degree.  Check with :func:`verify_grading`.
    """
    from .catalog import dixmier_lister
    from .lie import change_basis

    a = dixmier_lister()
    pairs = [(0, 4, 1), (1, 6, 1), (3, 7, 1), (0, 4, -1), (1, 6, -1), (3, 7, -1)]
    cols = []
    for i, j, c in pairs:
        x = [Fraction(0)] * 8
        x[i], x[j] = Fraction(1), Fraction(c)
        cols.append(x)
    cols += [a.basis_vector(2), a.basis_vector(5)]
    labels = ["X1+X5", "X2+X7", "X4+X8", "X1-X5", "X2-X7", "X4-X8", "X3", "X6"]
    b = change_basis(a, linalg.transpose(cols), labels=labels, check=False)
    plus, minus = (1, 0) if odd_plus else (0, 1)
    degrees = tuple((plus,) if k < 3 else (minus,) for k in range(8))
    return Grading(b, cyclic_product([2]), degrees, name="Gamma_DL")


def dixmier_lister_sign_grading() -> Grading:
    """A Z_2-grading of the Dixmier-Lister algebra from the sign automorphism
    diag(1,-1,1,-1,-1,1,-1,-1) in the original basis."""
    from .catalog import dixmier_lister

    signs = (1, -1, 1, -1, -1, 1, -1, -1)
    return Grading(dixmier_lister(), cyclic_product([2]),
                   tuple((int(e < 0),) for e in signs), name="sign")
