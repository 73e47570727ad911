"""Deciding equivalence of two basis-homogeneous gradings by elimination.

Two gradings are equivalent when an automorphism carries each component of
the first onto a component of the second.  For a fixed matching ``sigma`` of
components this is a system of polynomial equations in the block entries
of the automorphism (the homomorphism identities, plus ``t * det - 1`` for
invertibility); it has a solution over the algebraic closure iff its
reduced Groebner basis is not ``[1]``.  Only practical for small dimension.
"""

from __future__ import annotations

import sympy

from .gradings import Grading
from .lie import Subspace, lower_central_series

MAX_DIM = 7


def _profile(a, block, series):
    sub = Subspace.span([a.basis_vector(i) for i in block], a.dim)
    return tuple(sub.intersection_dim(s) for s in series)


def _matchings(src, dst, key_src, key_dst):
    """Bijections src -> dst (lists of blocks) preserving ``key``."""
    def rec(i, used, acc):
        if i == len(src):
            yield list(acc)
            return
        for j in range(len(dst)):
            if j not in used and key_src[i] == key_dst[j]:
                acc.append(j)
                yield from rec(i + 1, used | {j}, acc)
                acc.pop()

    yield from rec(0, frozenset(), [])


def _system(a, src, dst, match):
    n = a.dim
    phi = sympy.zeros(n, n)
    gens = []
    dets = []
    for bi, bj in enumerate(match):
        s, d = src[bi], dst[bj]
        block = sympy.zeros(len(d), len(s))
        for c, i in enumerate(s):
            for r, k in enumerate(d):
                x = sympy.Symbol(f"x_{k}_{i}")
                gens.append(x)
                phi[k, i] = x
                block[r, c] = x
        dets.append(block.det())
    t = sympy.Symbol("t")
    eqs = [sympy.expand(t * sympy.Mul(*dets) - 1)]
    cols = [phi[:, i] for i in range(n)]

    def br(u, v):
        out = sympy.zeros(n, 1)
        for (i, j), terms in a.constants.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff == 0:
                continue
            for k, c in terms:
                out[k] += sympy.Rational(c.numerator, c.denominator) * coeff
        return out

    for i in range(n):
        for j in range(i + 1, n):
            lhs = sympy.zeros(n, 1)
            for k, c in a.bracket_basis(i, j).items():
                lhs += sympy.Rational(c.numerator, c.denominator) * cols[k]
            diff = lhs - br(cols[i], cols[j])
            eqs.extend(e for e in (sympy.expand(x) for x in diff) if e != 0)
    return eqs, gens + [t]


def find_equivalence(g1: Grading, g2: Grading, prune: bool = True):
    """A component matching realized by some automorphism, or None.

    Returns ``(matching, groebner_basis)`` for the first consistent matching,
    where ``matching[i]`` is the index (in ``g2``'s component order) of the
    image of ``g1``'s ``i``-th component.  With ``prune`` matchings are
    restricted to components with equal filtration profiles (a necessary
    condition); without it every dimension-preserving matching is tried.
    """
    a = g1.algebra
    if g2.algebra != a:
        raise ValueError("gradings of different algebras")
    if a.dim > MAX_DIM:
        raise ValueError(f"elimination search is limited to dimension <= {MAX_DIM}")
    src = list(g1.components().values())
    dst = list(g2.components().values())
    if sorted(map(len, src)) != sorted(map(len, dst)):
        return None
    series = lower_central_series(a)
    ks = [(len(b), _profile(a, b, series) if prune else None) for b in src]
    kd = [(len(b), _profile(a, b, series) if prune else None) for b in dst]
    for match in _matchings(src, dst, ks, kd):
        eqs, gens = _system(a, src, dst, match)
        gb = sympy.groebner(eqs, *gens, order="grevlex")
        if list(gb.exprs) != [1]:
            return match, gb
    return None


def are_equivalent(g1: Grading, g2: Grading, prune: bool = True) -> bool:
    return find_equivalence(g1, g2, prune) is not None
