"""Exact computations with group gradings of filiform Lie algebras."""

from .catalog import A, B, L, Q, InvalidSpec, ModelSpec, make_model
from .derivations import derivation_space, diagonal_torus_rank, is_characteristically_nilpotent
from .gradings import Grading, classify, enumerate_factor_gradings, universal_group, verify_grading
from .groups import FGAbelianGroup
from .lie import JacobiViolation, LieAlgebra, is_filiform, jacobi_violations

__all__ = [
    "A", "B", "L", "Q", "InvalidSpec", "ModelSpec", "make_model",
    "derivation_space", "diagonal_torus_rank", "is_characteristically_nilpotent",
    "Grading", "classify", "enumerate_factor_gradings", "universal_group", "verify_grading",
    "FGAbelianGroup", "JacobiViolation", "LieAlgebra", "is_filiform", "jacobi_violations",
]
__version__ = "0.1.0"
