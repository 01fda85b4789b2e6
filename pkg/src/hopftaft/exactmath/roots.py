"""Roots of unity: the group U_n(K), its order nu(n) and a canonical generator."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import NoPrimitiveRoot
from .fields import CyclotomicField, Field, FieldElement, PrimeField
from .numtheory import factorize


@dataclass(frozen=True)
class RootsOfUnity:
    n: int
    elements: tuple[FieldElement, ...]
    nu: int
    generator: FieldElement

    def index_of(self, x: FieldElement) -> int:
        """Exponent k with generator**k == x."""
        for k, e in enumerate(self.elements):
            if e == x:
                return k
        raise ValueError(f"{x} is not an {self.n}-th root of unity")


def has_order(x: FieldElement, m: int) -> bool:
    """True iff x has multiplicative order exactly m."""
    if x ** m != 1:
        return False
    return all(x ** (m // r) != 1 for r, _ in factorize(m))


def _unity_group_order(field: Field) -> int:
    if isinstance(field, PrimeField):
        return field.p - 1
    return field.unity_order


def primitive_root_of_unity(field: Field, m: int) -> FieldElement:
    """Deterministic element of order exactly m.

    GF(p): the smallest residue of order m.  Q(zeta_M): zeta^(M/m) when
    m | M, otherwise (-zeta)^(2M/m) when m | 2M.
    """
    if m < 1:
        raise ValueError(f"root order must be positive, got {m}")
    if _unity_group_order(field) % m:
        raise NoPrimitiveRoot(m, field.name)
    if isinstance(field, PrimeField):
        for v in range(1, field.p):
            x = field(v)
            if has_order(x, m):
                return x
        raise AssertionError("unreachable: m divides p - 1")
    M = field.M
    if M % m == 0:
        root = field.zeta ** (M // m)
    else:
        root = (-field.zeta) ** (2 * M // m)
    assert has_order(root, m)
    return root


def roots_of_unity(field: Field, n: int) -> RootsOfUnity:
    """U_n(K) listed as powers of its canonical generator.

    The list is checked before returning: every entry satisfies x^n = 1,
    entries are distinct, and a scan of all roots of unity the field can
    contain finds exactly nu solutions of x^n = 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    nu = gcd(n, _unity_group_order(field))
    gen = primitive_root_of_unity(field, nu)
    elements = []
    x = field.one
    for _ in range(nu):
        elements.append(x)
        x = x * gen
    assert x == field.one
    assert all(e ** n == 1 for e in elements)
    assert len(set(elements)) == nu

    if isinstance(field, PrimeField):
        candidates = (field(v) for v in range(1, field.p))
    else:
        candidates = (s * field.zeta_power(k) for s in (1, -1) for k in range(field.M))
    found = {c for c in candidates if c ** n == 1}
    assert found == set(elements), "root-of-unity enumeration disagrees with the scan"
    return RootsOfUnity(n=n, elements=tuple(elements), nu=nu, generator=gen)


def nu(field: Field, n: int) -> int:
    """Order of U_n(K) without materializing it."""
    return gcd(n, _unity_group_order(field))


def element_order(x: FieldElement) -> int:
    """Multiplicative order of a root of unity in either backend."""
    if not x:
        raise ValueError("0 has no multiplicative order")
    bound = _unity_group_order(x.field)
    for d in sorted(d for d in range(1, bound + 1) if bound % d == 0):
        if x ** d == 1:
            return d
    raise ValueError(f"{x} is not a root of unity")


__all__ = [
    "RootsOfUnity",
    "element_order",
    "has_order",
    "nu",
    "primitive_root_of_unity",
    "roots_of_unity",
]
