"""Structure-constant Hopf algebras, axiom verification and coalgebra invariants."""

from .algebra import (
    AXIOM_FAMILIES,
    HopfAlgebra,
    LinearMap,
    group_likes,
    in_span,
    is_bijective,
    is_coalgebra_map,
    is_group_like,
    is_hopf_morphism,
    matrix_rank,
    same_structure,
    skew_primitives,
    structure_diff,
    tensor_product_hopf,
    verify_hopf,
)
from .report import AxiomCheck, AxiomReport
from .serialize import dumps, loads

__all__ = [
    "AXIOM_FAMILIES",
    "AxiomCheck",
    "AxiomReport",
    "HopfAlgebra",
    "LinearMap",
    "dumps",
    "group_likes",
    "in_span",
    "is_bijective",
    "is_coalgebra_map",
    "is_group_like",
    "is_hopf_morphism",
    "loads",
    "matrix_rank",
    "same_structure",
    "skew_primitives",
    "structure_diff",
    "tensor_product_hopf",
    "verify_hopf",
]
