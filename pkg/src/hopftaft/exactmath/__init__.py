"""Exact scalars (GF(p), Q(zeta_M)), linear algebra and number theory."""

from .fields import (
    CycElement,
    CyclotomicField,
    Field,
    FieldElement,
    FieldSpec,
    GF,
    GFElement,
    PrimeField,
    QZeta,
    make_field,
)
from .linalg import Matrix, RrefResult, rank, rref_and_kernel, rref_sparse
from .numtheory import divisors, extended_gcd, factorize, is_prime, totient, units_mod
from .polynomials import cyclotomic_polynomial
from .roots import RootsOfUnity, element_order, has_order, nu, primitive_root_of_unity, roots_of_unity

__all__ = [
    "CycElement",
    "CyclotomicField",
    "Field",
    "FieldElement",
    "FieldSpec",
    "GF",
    "GFElement",
    "Matrix",
    "PrimeField",
    "QZeta",
    "RootsOfUnity",
    "RrefResult",
    "cyclotomic_polynomial",
    "divisors",
    "element_order",
    "extended_gcd",
    "factorize",
    "has_order",
    "is_prime",
    "make_field",
    "nu",
    "primitive_root_of_unity",
    "rank",
    "rref_and_kernel",
    "rref_sparse",
    "roots_of_unity",
    "totient",
    "units_mod",
]
