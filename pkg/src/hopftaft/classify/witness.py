"""Explicit isomorphisms T^{xi^t} -> T^{xi^t'} and their inverses.

Given (l, s) from the criterion, the forward map is the quadruple
morphism with data (gamma, l, s).  With s tau + n mu = 1,
tau = alpha n + tau1 and l tau = beta m + tau2, the inverse is the
quadruple morphism with data (gamma^-1, m - tau2 mod m, tau1).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..constructions import quadruple_morphism, standard_quadruple
from ..errors import NotIsomorphic
from ..exactmath import extended_gcd
from ..hopfcore import AxiomReport, LinearMap, is_bijective
from .criterion import _criterion
from .family import family


@dataclass(frozen=True)
class BezoutData:
    tau: int
    mu: int
    tau1: int
    tau2: int
    alpha: int
    beta: int

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("tau", "mu", "tau1", "tau2", "alpha", "beta")}


@dataclass(eq=False)
class IsoWitness:
    t: int
    t2: int
    l: int
    s: int
    gamma: object
    bezout: BezoutData
    forward: LinearMap
    inverse: LinearMap
    forward_report: AxiomReport
    inverse_report: AxiomReport
    inverse_params: tuple[int, int]

    @property
    def mutually_inverse(self) -> bool:
        return self.forward.compose(self.inverse).is_identity() and self.inverse.compose(self.forward).is_identity()

    @property
    def verified(self) -> bool:
        return (
            self.forward_report.passed
            and self.inverse_report.passed
            and is_bijective(self.forward)
            and self.mutually_inverse
        )


def bezout_data(s: int, n: int, l: int, m: int) -> BezoutData:
    """tau in [0, n) with s tau = 1 mod n, and the splittings of tau and l tau."""
    g, x, _ = extended_gcd(s, n)
    if g != 1:
        raise ValueError(f"gcd({s}, {n}) = {g} != 1")
    tau = x % n
    mu = (1 - s * tau) // n
    assert s * tau + n * mu == 1
    tau1 = tau % n
    alpha = (tau - tau1) // n
    tau2 = (l * tau) % m
    beta = (l * tau - tau2) // m
    assert tau == alpha * n + tau1 and l * tau == beta * m + tau2
    return BezoutData(tau, mu, tau1, tau2, alpha, beta)


def witness_isomorphism(t: int, t2: int, m: int, n: int, field, q=None, xi=None, gamma=1) -> IsoWitness:
    """Forward and inverse isomorphisms with their verification reports.

    Raises NotIsomorphic when the criterion has no solution.
    """
    fam = family(m, n, field, q, xi)
    fam.check_exponent(t)
    fam.check_exponent(t2)
    sol = _criterion(fam, t, t2)
    if sol is None:
        raise NotIsomorphic(f"T^(xi^{t}) and T^(xi^{t2}) are not isomorphic")
    l, s = sol
    gamma = fam.field(gamma)
    bz = bezout_data(s, n, l, m)
    src, dst = fam.pair(t), fam.pair(t2)
    E, E2 = fam.algebra(t), fam.algebra(t2)
    fwd_quad = standard_quadruple(gamma, l, s, fam.A, fam.H)
    inv_l = (m - bz.tau2) % m
    inv_quad = standard_quadruple(gamma.inverse(), inv_l, bz.tau1, fam.A, fam.H)
    forward, fwd_report = quadruple_morphism(fwd_quad, src, dst, E, E2)
    inverse, inv_report = quadruple_morphism(inv_quad, dst, src, E2, E)
    return IsoWitness(
        t=t,
        t2=t2,
        l=l,
        s=s,
        gamma=gamma,
        bezout=bz,
        forward=forward,
        inverse=inverse,
        forward_report=fwd_report,
        inverse_report=inv_report,
        inverse_params=(inv_l, bz.tau1),
    )
