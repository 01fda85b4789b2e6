"""Isomorphism criterion, canonical exponents and class counting for T^{xi^t}_{nm^2}(q).

T^{xi^t} and T^{xi^t'} are isomorphic iff some s prime to n and some l
satisfy xi^(s t' - t) = q^l.  The scan over (s, l) is finite and exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from ..exactmath import divisors, factorize, units_mod
from .family import TaftFamily, family


def _criterion(fam: TaftFamily, t: int, t2: int) -> tuple[int, int] | None:
    q_powers = [fam.q ** l for l in range(fam.m)]
    for s in units_mod(fam.n):
        lhs = fam.xi ** ((s * t2 - t) % fam.nu)
        for l, ql in enumerate(q_powers):
            if lhs == ql:
                return l, s
    return None


def iso_criterion(t: int, t2: int, m: int, n: int, field, q=None, xi=None) -> tuple[int, int] | None:
    """(l, s) with gcd(s, n) = 1 and xi^(s t2 - t) = q^l, least by (s, l); None if none exists."""
    fam = family(m, n, field, q, xi)
    return _criterion(fam, fam.check_exponent(t), fam.check_exponent(t2))


def canonical_representative(t: int, m: int, n: int, field, q=None, xi=None) -> int:
    """gcd(t, nu/d) with d = gcd(m, nu); gcd(0, k) = k."""
    fam = family(m, n, field, q, xi)
    fam.check_exponent(t)
    return gcd(t, fam.nu // gcd(m, fam.nu))


@dataclass
class ClassificationReport:
    m: int
    n: int
    field: str
    nu: int
    d: int
    factorization: list[tuple[int, int]]
    count: int
    representatives: list[int]
    pairwise: list[list[bool]]
    classes: list[list[int]]
    aut: list = dc_field(default_factory=list)

    @property
    def nu_over_d(self) -> int:
        return self.nu // self.d

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "field": self.field,
            "nu": self.nu,
            "d": self.d,
            "nu_over_d_factorization": [[p, e] for p, e in self.factorization],
            "count": self.count,
            "representatives": list(self.representatives),
            "pairwise": [list(row) for row in self.pairwise],
            "aut": [a.to_dict() for a in self.aut],
        }


def pairwise_table(fam: TaftFamily) -> list[list[bool]]:
    return [[_criterion(fam, t, t2) is not None for t2 in range(fam.nu)] for t in range(fam.nu)]


def partition(table: list[list[bool]]) -> list[list[int]]:
    """Blocks of the relation given by a boolean table, each sorted, ordered by least element."""
    seen: set = set()
    blocks = []
    for t in range(len(table)):
        if t in seen:
            continue
        block = [u for u in range(len(table)) if table[t][u]]
        seen.update(block)
        blocks.append(block)
    return blocks


def count_classes(m: int, n: int, field, q=None, xi=None, with_aut: bool = True) -> ClassificationReport:
    """Number of isomorphism types among T^{xi^t}, 0 <= t < nu(n).

    The product formula over the factorization of nu/d is cross-checked
    against the partition of exponents induced by the criterion: the
    block count, the fibers of the canonical representative and the
    distinctness of the divisor representatives must all agree.
    """
    fam = family(m, n, field, q, xi)
    nu = fam.nu
    d = gcd(m, nu)
    k = nu // d
    fac = factorize(k)
    count = 1
    for _, e in fac:
        count *= e + 1
    reps = divisors(k)

    table = pairwise_table(fam)
    for t in range(nu):
        for t2 in range(nu):
            if table[t][t2] != table[t2][t]:
                raise AssertionError(f"criterion not symmetric at ({t}, {t2})")
    blocks = partition(table)
    if any(table[a][b] is False for block in blocks for a in block for b in block):
        raise AssertionError("criterion is not an equivalence relation")
    if len(blocks) != count:
        raise AssertionError(f"formula gives {count} classes, criterion partition gives {len(blocks)}")
    fibers: dict = {}
    for t in range(nu):
        fibers.setdefault(gcd(t, k), []).append(t)
    if sorted(fibers.values()) != sorted(blocks):
        raise AssertionError("canonical representatives do not match the criterion classes")
    if sorted(fibers) != reps:
        raise AssertionError("canonical representatives are not the divisors of nu/d")
    for a in reps:
        for b in reps:
            if a != b and table[a % nu][b % nu]:
                raise AssertionError(f"divisor representatives {a} and {b} are isomorphic")

    aut = []
    if with_aut:
        from .automorphisms import automorphism_group

        aut = [automorphism_group(r % nu, m, n, field, q, xi, verify=False) for r in reps]
    return ClassificationReport(
        m=m,
        n=n,
        field=str(fam.field.spec),
        nu=nu,
        d=d,
        factorization=fac,
        count=count,
        representatives=reps,
        pairwise=table,
        classes=blocks,
        aut=aut,
    )
