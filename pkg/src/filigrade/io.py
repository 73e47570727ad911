"""JSON documents for algebras and gradings.

Rationals are written as reduced ``"p/q"`` strings (integers as ``"p"``) and
keys are sorted, so equal inputs give identical bytes.  Bracket indices are
written relative to ``basis_origin`` (0 or 1), which the document records.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .catalog import ModelSpec
from .gradings import Grading
from .groups import FGAbelianGroup
from .lie import LieAlgebra

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    pass


def fraction_to_str(c) -> str:
    return str(Fraction(c))


def fraction_from_str(s) -> Fraction:
    if not isinstance(s, str):
        raise DocumentError(f"coefficient {s!r} must be a string 'p/q'")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad coefficient {s!r}") from exc


def spec_to_json(spec: ModelSpec) -> dict:
    doc = {"kind": spec.kind, "n": spec.n}
    if spec.p is not None:
        doc["p"] = spec.p
        doc["alphas"] = [fraction_to_str(x) for x in spec.alphas]
    return doc


def algebra_to_doc(a: LieAlgebra, basis_origin: int = 0, provenance=None) -> dict:
    if basis_origin not in (0, 1):
        raise ValueError("basis_origin must be 0 or 1")
    o = basis_origin
    brackets = [
        {"i": i + o, "j": j + o,
         "terms": [{"k": k + o, "coeff": fraction_to_str(c)} for k, c in terms]}
        for (i, j), terms in a.constants.items()
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "dim": a.dim,
        "basis": list(a.labels),
        "basis_origin": o,
        "brackets": brackets,
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def algebra_from_doc(doc: dict, basis_origin: int | None = None, check: bool = True) -> LieAlgebra:
    """Parse an AlgebraDoc.  The document's own ``basis_origin`` wins over the argument."""
    try:
        if str(doc.get("schema_version", SCHEMA_VERSION)) != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {doc['schema_version']!r}")
        o = int(doc.get("basis_origin", 0 if basis_origin is None else basis_origin))
        dim = int(doc["dim"])
        table = {}
        for entry in doc["brackets"]:
            i, j = int(entry["i"]) - o, int(entry["j"]) - o
            if (i, j) in table or (j, i) in table:
                raise DocumentError(f"bracket ({i + o}, {j + o}) listed twice")
            table[(i, j)] = [(int(t["k"]) - o, fraction_from_str(t["coeff"])) for t in entry["terms"]]
        labels = doc.get("basis")
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed algebra document: {exc}") from exc
    try:
        return LieAlgebra(dim, table, labels=labels, check=check)
    except ValueError as exc:
        if exc.__class__ is ValueError:
            raise DocumentError(str(exc)) from exc
        raise


def grading_to_doc(g: Grading) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "group": g.group.to_json(),
        "degrees": [list(d) for d in g.degrees],
    }
    if g.name:
        doc["name"] = g.name
    return doc


def grading_from_doc(doc: dict, algebra: LieAlgebra) -> Grading:
    try:
        group = FGAbelianGroup.from_json(doc["group"])
        degrees = tuple(tuple(int(x) for x in d) for d in doc["degrees"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed grading document: {exc}") from exc
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    if len(degrees) != algebra.dim:
        raise DocumentError(f"{len(degrees)} degrees for an algebra of dimension {algebra.dim}")
    if any(len(d) != group.ngens for d in degrees):
        raise DocumentError(f"degrees must have {group.ngens} coordinate(s) for {group}")
    return Grading(algebra, group, degrees, doc.get("name"))


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc})") from exc
