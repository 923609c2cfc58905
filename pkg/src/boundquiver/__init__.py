"""Exact homological algebra over finite-dimensional monomial quiver algebras."""

from .algebra import AlgebraElement, MonomialAlgebra, Path, Quiver, build_algebra, example_algebra, right_ideal_basis
from .decomp import Decomposition, decompose, is_direct_summand, is_indecomposable, is_isomorphic
from .homology import (
    cosyzygy,
    ext1_basis,
    extension_from_class,
    in_tau_omega,
    is_nth_syzygy,
    projective_cover,
    syzygy,
    tau,
    tau_inverse,
    tau_n,
    transpose,
)
from .errors import DSLError, InconclusiveDecomposition, InconclusiveIsomorphism
from .linalg import Matrix, PrimeField
from .repmod import ModuleHom, Representation, direct_sum, dual, hom_basis, injective, projective, simple

__version__ = "0.1.0"

__all__ = [
    "DSLError",
    "InconclusiveDecomposition",
    "InconclusiveIsomorphism",
    "AlgebraElement",
    "Decomposition",
    "Matrix",
    "ModuleHom",
    "MonomialAlgebra",
    "Path",
    "PrimeField",
    "Quiver",
    "Representation",
    "build_algebra",
    "cosyzygy",
    "decompose",
    "direct_sum",
    "dual",
    "ext1_basis",
    "extension_from_class",
    "hom_basis",
    "in_tau_omega",
    "injective",
    "is_direct_summand",
    "is_indecomposable",
    "is_isomorphic",
    "is_nth_syzygy",
    "example_algebra",
    "projective",
    "projective_cover",
    "right_ideal_basis",
    "simple",
    "syzygy",
    "tau",
    "tau_inverse",
    "tau_n",
    "transpose",
]
