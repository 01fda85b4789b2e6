"""Hopf algebra maps between smash products A # H -> A #' H from quadruples (u, p, r, v).

u: A -> A and r: H -> A are unitary coalgebra maps, p: A -> H and
v: H -> H Hopf algebra maps.  The induced linear map is

    psi(a # t) = u(a1) (p(a2) |>' r(t1)) #' p(a3) v(t2)

and it is a Hopf algebra map exactly when the six compatibility
conditions C1-C6 hold; the report records each of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import InvalidParameters
from ..hopfcore import AxiomReport, HopfAlgebra, LinearMap, is_coalgebra_map, is_hopf_morphism
from ..hopfcore import vectors as V
from ..hopfcore.report import _Sweep
from .matched import MatchedPair, smash_product

CONDITIONS = ("C1", "C2", "C3", "C4", "C5", "C6")


@dataclass(eq=False)
class Quadruple:
    u: LinearMap  # A -> A
    p: LinearMap  # A -> H
    r: LinearMap  # H -> A
    v: LinearMap  # H -> H
    gamma: Any = None
    l: int | None = None
    s: int | None = None
    c: int = 0

    @property
    def params(self) -> tuple:
        return (self.gamma, self.l, self.s, self.c)


def standard_quadruple(gamma, l: int, s: int, A: HopfAlgebra, H: HopfAlgebra, c: int = 0) -> Quadruple:
    """u(h^i x^j) = gamma^j h^i x^j, p(h^i x^j) = delta_j0 g^(ic),
    r(g^k) = h^(kl), v(g^k) = g^(ks).

    c = 0 (the default) makes p the trivial map a -> epsilon(a) 1.
    """
    F = A.field
    gamma = F(gamma)
    if not gamma:
        raise InvalidParameters("gamma must be nonzero")
    pa, ph = A.presentation, H.presentation
    m, n = pa.m, ph.n
    if not (0 <= l < m and 0 <= s < n):
        raise InvalidParameters(f"need 0 <= l < {m} and 0 <= s < {n}, got l={l}, s={s}")
    u_cols, p_cols = [], []
    for a in range(A.dim):
        j, k, _ = pa.exponents(a)
        u_cols.append({a: gamma ** k})
        p_cols.append(ph.vector(i=j * c) if k == 0 else {})
    r_cols, v_cols = [], []
    for y in range(H.dim):
        k = ph.exponents(y)[2]
        r_cols.append(pa.vector(j=k * l))
        v_cols.append(ph.vector(i=k * s))
    return Quadruple(
        u=LinearMap(A, A, u_cols),
        p=LinearMap(A, H, p_cols),
        r=LinearMap(H, A, r_cols),
        v=LinearMap(H, H, v_cols),
        gamma=gamma,
        l=l,
        s=s,
        c=c,
    )


def _delta2(H: HopfAlgebra, i: int) -> list:
    acc: dict = {}
    for (a, b), c in H.comult[i].items():
        for (x, y), e in H.comult[a].items():
            key = (x, y, b)
            acc[key] = acc[key] + c * e if key in acc else c * e
    return [(k, c) for k, c in acc.items() if c]


def _join(dH: int, u: dict, w: dict, coef, acc: dict) -> None:
    for a, x in u.items():
        for y, z in w.items():
            V.axpy(acc, coef * x * z, {a * dH + y: 1})


def psi_matrix(quad: Quadruple, src: MatchedPair, dst: MatchedPair, source: HopfAlgebra, target: HopfAlgebra) -> LinearMap:
    A, H = src.A, src.H
    A2, H2 = dst.A, dst.H
    u, p, r, v = quad.u, quad.p, quad.r, quad.v
    cols = []
    for a in range(A.dim):
        d2 = _delta2(A, a)
        for t in range(H.dim):
            acc: dict = {}
            for (a1, a2, a3), c in d2:
                pa2, pa3 = p.columns[a2], p.columns[a3]
                if not pa2 or not pa3:
                    continue
                ua1 = u.columns[a1]
                for (t1, t2), e in H.comult[t].items():
                    left = A2.multiply(ua1, dst.act_left(pa2, r.columns[t1]))
                    right = H2.multiply(pa3, v.columns[t2])
                    _join(H2.dim, left, right, c * e, acc)
            cols.append(acc)
    return LinearMap(source, target, cols)


def quadruple_report(quad: Quadruple, src: MatchedPair, dst: MatchedPair) -> AxiomReport:
    """Map-type checks on u, p, r, v followed by C1-C6."""
    A, H = src.A, src.H
    A2, H2 = dst.A, dst.H
    u, p, r, v = quad.u, quad.p, quad.r, quad.v
    report = AxiomReport()
    for name, rep in (
        ("u_unitary_coalgebra", is_coalgebra_map(u, unitary=True)),
        ("r_unitary_coalgebra", is_coalgebra_map(r, unitary=True)),
        ("p_hopf", is_hopf_morphism(p)),
        ("v_hopf", is_hopf_morphism(v)),
    ):
        sweep = _Sweep(name)
        bad = rep.first_failure()
        if bad is not None:
            sweep.check.passed = False
            sweep.check.witness = (bad.name,) + tuple(bad.witness or ())
            sweep.check.lhs, sweep.check.rhs = bad.lhs, bad.rhs
        sweep.check.checked = sum(ch.checked for ch in rep.checks)
        report.add(sweep.check)

    c1 = _Sweep("C1")
    for a in range(A.dim):
        lhs: dict = {}
        rhs: dict = {}
        for (a1, a2), c in A.comult[a].items():
            V.axpy(lhs, c, V.tensor(u.columns[a1], p.columns[a2]))
            V.axpy(rhs, c, V.tensor(u.columns[a2], p.columns[a1]))
        c1.compare((a,), lhs, rhs)
    report.add(c1.check)

    c2 = _Sweep("C2")
    for t in range(H.dim):
        lhs = {}
        rhs = {}
        for (t1, t2), c in H.comult[t].items():
            V.axpy(lhs, c, V.tensor(r.columns[t1], v.columns[t2]))
            V.axpy(rhs, c, V.tensor(r.columns[t2], v.columns[t1]))
        c2.compare((t,), lhs, rhs)
    report.add(c2.check)

    c3 = _Sweep("C3")
    for a in range(A.dim):
        for b in range(A.dim):
            rhs = {}
            for (a1, a2), c in A.comult[a].items():
                V.axpy(rhs, c, A2.multiply(u.columns[a1], dst.act_left(p.columns[a2], u.columns[b])))
            c3.compare((a, b), u.apply(A.mult[a][b]), rhs)
    report.add(c3.check)

    c4 = _Sweep("C4")
    for t in range(H.dim):
        for w in range(H.dim):
            rhs = {}
            for (t1, t2), c in H.comult[t].items():
                V.axpy(rhs, c, A2.multiply(r.columns[t1], dst.act_left(v.columns[t2], r.columns[w])))
            c4.compare((t, w), r.apply(H.mult[t][w]), rhs)
    report.add(c4.check)

    c5 = _Sweep("C5")
    for t in range(H.dim):
        d2 = _delta2(H, t)
        for b in range(A.dim):
            lhs = {}
            for (t1, t2), c in H.comult[t].items():
                V.axpy(lhs, c, A2.multiply(r.columns[t1], dst.act_left(v.columns[t2], u.columns[b])))
            rhs = {}
            for (t1, t2, t3), c in d2:
                for (b1, b2), e in A.comult[b].items():
                    first = u.apply(src.left[t1][b1])
                    second = p.apply(src.left[t2][b2])
                    if first and second:
                        V.axpy(rhs, c * e, A2.multiply(first, dst.act_left(second, r.columns[t3])))
            c5.compare((t, b), lhs, rhs)
    report.add(c5.check)

    c6 = _Sweep("C6")
    for t in range(H.dim):
        for b in range(A.dim):
            rhs = {}
            for (t1, t2), c in H.comult[t].items():
                V.axpy(rhs, c, H2.multiply(p.apply(src.left[t1][b]), v.columns[t2]))
            c6.compare((t, b), H2.multiply(v.columns[t], p.columns[b]), rhs)
    report.add(c6.check)
    return report


def quadruple_morphism(
    quad: Quadruple,
    src: MatchedPair,
    dst: MatchedPair,
    source: HopfAlgebra | None = None,
    target: HopfAlgebra | None = None,
) -> tuple[LinearMap, AxiomReport]:
    """psi_(u,p,r,v) as a matrix plus a report of C1-C6 and of the Hopf-map checks on psi.

    ``source``/``target`` may be passed to reuse already built smash products.
    """
    if source is None:
        source = smash_product(src.A, src.H, src.left)
    if target is None:
        target = smash_product(dst.A, dst.H, dst.left)
    psi = psi_matrix(quad, src, dst, source, target)
    report = quadruple_report(quad, src, dst)
    report.extend(is_hopf_morphism(psi), prefix="psi_")
    return psi, report
