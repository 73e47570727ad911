"""Finitely generated abelian groups in invariant-factor form.

Elements are integer tuples: the free coordinates first, then one residue per
invariant factor (reduced into ``0 .. d-1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from .linalg import smith_normal_form

Element = tuple


@dataclass(frozen=True)
class FGAbelianGroup:
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in t):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError("invariant factors must form a divisibility chain")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def order(self):
        """Cardinality, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def reduce(self, x) -> Element:
        x = tuple(int(v) for v in x)
        if len(x) != self.ngens:
            raise ValueError(f"element {x} does not belong to {self}")
        f = self.free_rank
        return x[:f] + tuple(v % d for v, d in zip(x[f:], self.torsion))

    def zero(self) -> Element:
        return (0,) * self.ngens

    def add(self, x, y) -> Element:
        return self.reduce(tuple(a + b for a, b in zip(x, y)))

    def neg(self, x) -> Element:
        return self.reduce(tuple(-a for a in x))

    def sub(self, x, y) -> Element:
        return self.reduce(tuple(a - b for a, b in zip(x, y)))

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        if not parts:
            return "0"
        if self.free_rank > 1 and not self.torsion:
            return f"Z^{self.free_rank}"
        return " x ".join(parts)

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, doc):
        return cls(int(doc["free_rank"]), tuple(int(d) for d in doc["torsion"]))


def free(r: int) -> FGAbelianGroup:
    return FGAbelianGroup(r)


@dataclass(frozen=True)
class Quotient:
    """The canonical map ``Z^g -> Z^g / <relations>``.

    ``matrix`` has one row per generator; the image of ``x`` is ``x @ matrix``
    reduced in ``group``.
    """

    ngens: int
    group: FGAbelianGroup
    matrix: tuple

    def image(self, x) -> Element:
        if len(x) != self.ngens:
            raise ValueError("wrong number of coordinates")
        cols = len(self.matrix[0]) if self.matrix else 0
        y = [sum(int(x[i]) * self.matrix[i][j] for i in range(self.ngens)) for j in range(cols)]
        return self.group.reduce(y)

    def generator_images(self) -> list[Element]:
        return [self.image(tuple(int(i == j) for j in range(self.ngens))) for i in range(self.ngens)]


def quotient(ngens: int, relations) -> Quotient:
    """Present ``Z^ngens / <relations>`` in canonical form via Smith normal form."""
    rels = [list(map(int, r)) for r in relations if any(r)]
    if not rels:
        ident = tuple(tuple(int(i == j) for j in range(ngens)) for i in range(ngens))
        return Quotient(ngens, FGAbelianGroup(ngens), ident)
    _, s, v = smith_normal_form(rels)
    diag = [s[i][i] if i < len(s) else 0 for i in range(ngens)]
    free_idx = [i for i in range(ngens) if diag[i] == 0]
    tors_idx = sorted((i for i in range(ngens) if diag[i] > 1), key=lambda i: diag[i])
    keep = free_idx + tors_idx
    group = FGAbelianGroup(len(free_idx), tuple(diag[i] for i in tors_idx))
    matrix = tuple(tuple(v[r][c] for c in keep) for r in range(ngens))
    return Quotient(ngens, group, matrix)


def group_quotient(group: FGAbelianGroup, generators) -> Quotient:
    """``group / <generators>``, as a map on the coordinates of ``group``."""
    f = group.free_rank
    rels = [list(map(int, g)) for g in generators]
    for i, d in enumerate(group.torsion):
        row = [0] * group.ngens
        row[f + i] = d
        rels.append(row)
    return quotient(group.ngens, rels)


def cyclic_product(orders) -> FGAbelianGroup:
    """Canonical form of a product of cyclic groups; order 0 stands for Z."""
    orders = list(orders)
    return quotient(len(orders), [[o * (i == j) for j in range(len(orders))]
                                  for i, o in enumerate(orders)]).group


def is_quotient_of(small: FGAbelianGroup, big: FGAbelianGroup) -> bool:
    """Whether ``small`` is a homomorphic image of ``big``.

    With invariant factors listed in divisibility order and Z counted as the
    factor 0 at the top, this holds iff ``small`` has no more factors than
    ``big`` and, aligned from the top, each factor of ``small`` divides the
    matching factor of ``big``.
    """
    def factors(g):
        return list(g.torsion) + [0] * g.free_rank

    a, b = factors(small), factors(big)
    if len(a) > len(b):
        return False
    a = [1] * (len(b) - len(a)) + a
    # align from the top: largest (0 = infinite) factors last
    for x, y in zip(a, b):
        if y == 0:
            continue
        if x == 0 or y % x:
            return False
    return True

