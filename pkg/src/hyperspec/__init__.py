"""Exact characteristic polynomials, multiplicities and eigenvarieties of
hypergraph adjacency and Laplacian tensors."""

from .eigenvariety import (
    EigenvarietyDescription,
    Family,
    cardinality,
    describe,
    enumerate_phases,
    family_oracle,
    verify_phase,
)
from .hypergraph import Hypergraph, SimpleGraph, from_json, validate
from .macaulay import SizeGuardError, macaulay_matrices, tensor_charpoly
from .multiplicity import am_rho_adjacency, am_zero_laplacian, verify_main_theorem
from .poly import UniPoly
from .tensor import CubicalTensor, adjacency_tensor, laplacian_tensor, signless_laplacian_tensor

__all__ = [
    "CubicalTensor",
    "EigenvarietyDescription",
    "Family",
    "Hypergraph",
    "SimpleGraph",
    "SizeGuardError",
    "UniPoly",
    "adjacency_tensor",
    "am_rho_adjacency",
    "am_zero_laplacian",
    "cardinality",
    "describe",
    "enumerate_phases",
    "family_oracle",
    "from_json",
    "laplacian_tensor",
    "macaulay_matrices",
    "signless_laplacian_tensor",
    "tensor_charpoly",
    "validate",
    "verify_main_theorem",
    "verify_phase",
]
