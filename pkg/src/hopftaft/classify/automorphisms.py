"""The finite part S^t of Aut(T^{xi^t}_{nm^2}(q)) = K* x S^t.

S^t = {(l, s) : gcd(s, n) = 1, xi^(t(s-1)) = q^l} under
(l, s)(l', s') = (l + s l' mod m, s s' mod n).  Each (gamma, l, s) acts by
h -> h, x -> gamma x, g -> h^l g^s.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..constructions import quadruple_morphism, standard_quadruple
from ..errors import InvalidParameters
from ..exactmath import PrimeField, units_mod
from ..hopfcore import is_bijective
from .family import TaftFamily, family

K_STAR_NOTE = "Aut = K* x S^t; the K* factor (x -> gamma x) is kept symbolic"


@dataclass
class AutGroup:
    t: int
    m: int
    n: int
    elements: list[tuple[int, int]]
    field_star_note: str = K_STAR_NOTE
    group_axioms: bool | None = None
    morphisms_verified: bool | None = None
    composition_law: bool | None = None
    brute_force_count: int | None = None
    expected_brute_force: int | None = None
    notes: list[str] = dc_field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        (l, s), (l2, s2) = a, b
        return ((l + s * l2) % self.m, (s * s2) % self.n)

    def inverse(self, a: tuple[int, int]) -> tuple[int, int]:
        l, s = a
        s2 = next(x for x in units_mod(self.n) if (s * x) % self.n == 1 % self.n)
        return ((-l * s2) % self.m, s2)

    @property
    def identity(self) -> tuple[int, int]:
        return (0, 1 % self.n)

    def to_dict(self) -> dict:
        return {"t": self.t, "s_t_elements": [list(e) for e in self.elements], "s_t_order": self.order}


def s_t_elements(fam: TaftFamily, t: int) -> list[tuple[int, int]]:
    """Members of S^t, identity first, the rest ordered by (s, l)."""
    q_powers = [fam.q ** l for l in range(fam.m)]
    found = []
    for s in units_mod(fam.n):
        lhs = fam.xi ** ((t * (s - 1)) % fam.nu)
        for l, ql in enumerate(q_powers):
            if lhs == ql:
                found.append((l, s))
    ident = (0, 1 % fam.n)
    assert ident in found
    return [ident] + [e for e in found if e != ident]


def check_group_axioms(group: AutGroup) -> bool:
    elems = set(group.elements)
    if group.identity not in elems:
        return False
    for a in group.elements:
        if group.multiply(a, group.identity) != a or group.multiply(group.identity, a) != a:
            return False
        inv = group.inverse(a)
        if inv not in elems or group.multiply(a, inv) != group.identity or group.multiply(inv, a) != group.identity:
            return False
        for b in group.elements:
            if group.multiply(a, b) not in elems:
                return False
            for c in group.elements:
                if group.multiply(group.multiply(a, b), c) != group.multiply(a, group.multiply(b, c)):
                    return False
    return True


def automorphism_maps(fam: TaftFamily, t: int, elements, gamma=1) -> dict:
    """(l, s) -> (psi, report) for the induced endomorphisms of T^{xi^t}."""
    pair = fam.pair(t)
    E = fam.algebra(t)
    out = {}
    for l, s in elements:
        quad = standard_quadruple(gamma, l, s, fam.A, fam.H)
        out[(l, s)] = quadruple_morphism(quad, pair, pair, E, E)
    return out


def automorphism_group(
    t: int,
    m: int,
    n: int,
    field,
    q=None,
    xi=None,
    *,
    verify: bool = True,
    brute_force: bool = False,
    budget: int = 100_000,
) -> AutGroup:
    """Enumerate S^t; with ``verify`` also certify every element as a bijective
    Hopf automorphism and check that matrix composition realizes the group law.
    ``brute_force`` (GF(p) only) counts all Hopf automorphisms independently.
    """
    fam = family(m, n, field, q, xi)
    fam.check_exponent(t)
    group = AutGroup(t=t, m=m, n=n, elements=s_t_elements(fam, t))
    group.group_axioms = check_group_axioms(group)
    if verify:
        maps = automorphism_maps(fam, t, group.elements)
        group.morphisms_verified = all(rep.passed and is_bijective(psi) for psi, rep in maps.values())
        ok = True
        for a in group.elements:
            for b in group.elements:
                composed = maps[a][0].compose(maps[b][0])
                if composed != maps[group.multiply(a, b)][0]:
                    ok = False
        group.composition_law = ok
    if brute_force:
        if not isinstance(fam.field, PrimeField):
            raise InvalidParameters("brute-force automorphism count needs a prime field")
        from .bruteforce import brute_force_hopf_isos

        E = fam.algebra(t)
        group.brute_force_count = len(brute_force_hopf_isos(E, E, budget=budget))
        group.expected_brute_force = (fam.field.p - 1) * group.order
    return group
