"""Taft algebras, cyclic group algebras and the quantum groups T^omega_{nm^2}(q)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import BadRoot, InvalidParameters, NotARoot
from ..exactmath import Field, FieldElement, FieldSpec, has_order, make_field, primitive_root_of_unity
from ..hopfcore import HopfAlgebra
from .rewriting import CYCLIC, NILPOTENT, Generator, QCommutingSystem


def as_field(field: Field | FieldSpec | str) -> Field:
    if isinstance(field, Field):
        return field
    return make_field(field)


@dataclass(frozen=True, eq=False)
class Presentation:
    """Generators and parameters an algebra was built from.

    ``m``/``q`` describe the Taft part (absent for a bare group algebra),
    ``n``/``omega`` the cyclic part (absent for a bare Taft algebra).
    """

    kind: str  # "taft" | "group" | "tqg"
    system: QCommutingSystem
    m: int | None = None
    q: Any = None
    n: int | None = None
    omega: Any = None

    def _exps(self, j: int = 0, k: int = 0, i: int = 0) -> list[int]:
        if self.kind == "taft":
            return [j % self.m, k]
        if self.kind == "group":
            return [i % self.n]
        return [j % self.m, k, i % self.n]

    def index(self, j: int = 0, k: int = 0, i: int = 0) -> int | None:
        """Basis index of h^j x^k g^i (None when x^k vanishes)."""
        if self.m is not None and k >= self.m:
            return None
        return self.system.index(self._exps(j, k, i))

    def exponents(self, idx: int) -> tuple[int, int, int]:
        """(j, k, i) with e_idx = h^j x^k g^i."""
        e = self.system.exponents[idx]
        if self.kind == "taft":
            return e[0], e[1], 0
        if self.kind == "group":
            return 0, 0, e[0]
        return e[0], e[1], e[2]

    def vector(self, j: int = 0, k: int = 0, i: int = 0) -> dict:
        idx = self.index(j, k, i)
        return {} if idx is None else {idx: self.system.field.one}


def _check_q(F: Field, m: int, q) -> FieldElement:
    if m < 2:
        raise InvalidParameters(f"Taft order m must be at least 2, got {m}")
    if q is None:
        return primitive_root_of_unity(F, m)
    q = F(q)
    if not has_order(q, m):
        raise BadRoot(f"{q} is not a primitive {m}-th root of unity in {F.name}")
    return q


def _check_omega(F: Field, n: int, omega) -> FieldElement:
    if n < 1:
        raise InvalidParameters(f"group order n must be positive, got {n}")
    omega = F(omega)
    if omega ** n != 1:
        raise NotARoot(f"{omega}^{n} != 1 in {F.name}")
    return omega


def taft(field, m: int, q=None) -> HopfAlgebra:
    """T_{m^2}(q) on the basis h^i x^j, index i*m + j.

    ``q`` defaults to the canonical primitive m-th root of unity.
    """
    F = as_field(field)
    q = _check_q(F, m, q)
    system = QCommutingSystem(
        F,
        [Generator("h", m, CYCLIC), Generator("x", m, NILPOTENT)],
        {(1, 0): q},
    )
    one = F.one
    h, x, unit = system.index([1, 0]), system.index([0, 1]), system.index([0, 0])
    h_inv = system.index([m - 1, 0])
    x_h_inv = system.index([m - 1, 1])
    # S(x) = -x h^{m-1} = -q^{m-1} h^{m-1} x
    pres = Presentation("taft", system, m=m, q=q)
    return system.build_hopf(
        delta={0: {(h, h): one}, 1: {(x, h): one, (unit, x): one}},
        counit={0: one, 1: F.zero},
        antipode={0: {h_inv: one}, 1: {x_h_inv: -(q ** (m - 1))}},
        presentation=pres,
        name=f"T_{m * m}({q})",
    )


def group_algebra(field, n: int) -> HopfAlgebra:
    """K[C_n] on the basis g^i, index i."""
    F = as_field(field)
    if n < 1:
        raise InvalidParameters(f"group order n must be positive, got {n}")
    system = QCommutingSystem(F, [Generator("g", n, CYCLIC)])
    one = F.one
    g = system.index([1 % n])
    return system.build_hopf(
        delta={0: {(g, g): one}},
        counit={0: one},
        antipode={0: {system.index([(n - 1) % n]): one}},
        presentation=Presentation("group", system, n=n),
        name=f"K[C_{n}]",
    )


def t_quantum_group(field, m: int, q, n: int, omega, *, cross_check: bool = True) -> HopfAlgebra:
    """T^omega_{nm^2}(q): generators h, x, g with g^n = h^m = 1, x^m = 0,
    xh = q hx, hg = gh, gx = omega xg.

    Basis h^j x^k g^i with index (j*m + k)*n + i.  With ``cross_check`` the
    tensors are compared entrywise with the smash product of the standard
    left action.
    """
    F = as_field(field)
    q = _check_q(F, m, q)
    omega = _check_omega(F, n, omega)
    system = QCommutingSystem(
        F,
        [Generator("h", m, CYCLIC), Generator("x", m, NILPOTENT), Generator("g", n, CYCLIC)],
        {(1, 0): q, (2, 0): F.one, (2, 1): omega},
    )
    one = F.one
    idx = system.index
    h, x, g, unit = idx([1, 0, 0]), idx([0, 1, 0]), idx([0, 0, 1 % n]), idx([0, 0, 0])
    pres = Presentation("tqg", system, m=m, q=q, n=n, omega=omega)
    H = system.build_hopf(
        delta={
            0: {(h, h): one},
            1: {(x, h): one, (unit, x): one},
            2: {(g, g): one},
        },
        counit={0: one, 1: F.zero, 2: one},
        antipode={
            0: {idx([m - 1, 0, 0]): one},
            1: {idx([m - 1, 1, 0]): -(q ** (m - 1))},
            2: {idx([0, 0, (n - 1) % n]): one},
        },
        presentation=pres,
        name=f"T^{omega}_{n * m * m}({q})",
    )
    if cross_check:
        from ..hopfcore import structure_diff
        from .matched import smash_product, standard_matched_pair

        mp = standard_matched_pair(F, m, q, n, omega)
        diff = structure_diff(H, smash_product(mp.A, mp.H, mp.left))
        if diff is not None:
            raise AssertionError(f"rewriting and smash product disagree: {diff}")
    return H
