"""Independent isomorphism oracle: search over images of the generators g, h, x.

A Hopf algebra map out of T^omega_{nm^2}(q) is fixed by where it sends
g, h and x.  g and h must go to group-likes g', h', and x to an
(h', 1)-skew-primitive x'.  Over GF(p) the skew-primitive space is finite,
so all candidates are enumerated, filtered by the defining relations and
kept when the induced map is a bijective Hopf algebra map.
"""

from __future__ import annotations

import itertools

from ..errors import BudgetExceeded, InvalidParameters
from ..exactmath import PrimeField
from ..hopfcore import HopfAlgebra, LinearMap, group_likes, is_bijective, is_hopf_morphism, skew_primitives

DEFAULT_BUDGET = 100_000


def _span(F, basis):
    if not basis:
        yield {}
        return
    elems = list(F.elements())
    for coeffs in itertools.product(elems, repeat=len(basis)):
        acc: dict = {}
        for c, b in zip(coeffs, basis):
            if c:
                for k, v in b.items():
                    y = acc.get(k, F.zero) + c * v
                    if y:
                        acc[k] = y
                    else:
                        acc.pop(k, None)
        yield acc


def _powers(H: HopfAlgebra, v: dict, count: int) -> list[dict]:
    out = [H.one()]
    for _ in range(count - 1):
        out.append(H.multiply(out[-1], v))
    return out


def brute_force_hopf_isos(H1: HopfAlgebra, H2: HopfAlgebra, budget: int = DEFAULT_BUDGET) -> list[LinearMap]:
    """All Hopf algebra isomorphisms H1 -> H2 for H1 of shape T^omega_{nm^2}(q) over GF(p)."""
    if H1.dim != H2.dim:
        return []
    F = H1.field
    if not isinstance(F, PrimeField) or H2.field.spec != F.spec:
        raise InvalidParameters("brute-force isomorphism search needs both algebras over the same prime field")
    pres = H1.presentation
    if pres is None or pres.kind != "tqg":
        raise InvalidParameters("source must be a T^omega_{nm^2}(q) built by t_quantum_group")
    m, n, q, omega = pres.m, pres.n, pres.q, pres.omega

    G2 = group_likes(H2)
    spaces = [(hp, skew_primitives(H2, hp, H2.one())) for hp in G2]
    total = len(G2) * sum(F.order ** len(basis) for _, basis in spaces)
    if total > budget:
        raise BudgetExceeded(total, budget, "brute-force isomorphism search")

    one = H2.one()
    mul = H2.multiply
    found = []
    for gp in G2:
        if H2.power(gp, n) != one:
            continue
        for hp, basis in spaces:
            if H2.power(hp, m) != one or mul(hp, gp) != mul(gp, hp):
                continue
            for xp in _span(F, basis):
                if H2.power(xp, m):
                    continue
                if mul(xp, hp) != {k: q * c for k, c in mul(hp, xp).items()}:
                    continue
                if mul(gp, xp) != {k: omega * c for k, c in mul(xp, gp).items() if omega * c}:
                    continue
                hpow, xpow, gpow = _powers(H2, hp, m), _powers(H2, xp, m), _powers(H2, gp, n)
                cols = []
                for idx in range(H1.dim):
                    j, k, i = pres.exponents(idx)
                    cols.append(mul(mul(hpow[j], xpow[k]), gpow[i]))
                f = LinearMap(H1, H2, cols)
                if is_bijective(f) and is_hopf_morphism(f).passed:
                    found.append(f)
    return found
