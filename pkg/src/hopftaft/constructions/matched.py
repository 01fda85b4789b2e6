"""Matched pairs of Hopf algebras, bicrossed products and smash products.

Action tensors are stored fully materialized: ``left[y][a]`` is the vector
e_y |> e_a in A and ``right[y][a]`` is e_y <| e_a in H.  The bicrossed
product A |><| H lives on the basis a (x) y with index a * dim(H) + y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import InvalidMatchedPair, NotModuleAlgebra, SymmetryFails
from ..exactmath import roots_of_unity
from ..hopfcore import AxiomReport, HopfAlgebra, group_likes, in_span, skew_primitives
from ..hopfcore import vectors as V
from ..hopfcore.report import _Sweep
from .algebras import _check_omega, _check_q, as_field, group_algebra, taft


@dataclass(eq=False)
class MatchedPair:
    A: HopfAlgebra
    H: HopfAlgebra
    left: list  # left[y][a] -> vector in A
    right: list  # right[y][a] -> vector in H
    omega: Any = None
    candidates: tuple = ()  # generator data when produced by matched_pair_search

    def act_left(self, y: dict, a: dict) -> dict:
        acc: dict = {}
        for i, c in y.items():
            row = self.left[i]
            for j, e in a.items():
                V.axpy(acc, c * e, row[j])
        return acc

    def act_right(self, y: dict, a: dict) -> dict:
        acc: dict = {}
        for i, c in y.items():
            row = self.right[i]
            for j, e in a.items():
                V.axpy(acc, c * e, row[j])
        return acc

    def same_actions(self, other: "MatchedPair") -> bool:
        return self.left == other.left and self.right == other.right

    def __repr__(self) -> str:
        tag = f" omega={self.omega}" if self.omega is not None else ""
        return f"<MatchedPair {self.A.dim}x{self.H.dim}{tag}>"


def trivial_right_action(A: HopfAlgebra, H: HopfAlgebra) -> list:
    """y <| a = epsilon(a) y."""
    return [[V.scale(A.counit[a], H.basis(y)) for a in range(A.dim)] for y in range(H.dim)]


def trivial_left_action(A: HopfAlgebra, H: HopfAlgebra) -> list:
    """y |> a = epsilon(y) a."""
    return [[V.scale(H.counit[y], A.basis(a)) for a in range(A.dim)] for y in range(H.dim)]


def standard_actions(A: HopfAlgebra, H: HopfAlgebra, omega) -> MatchedPair:
    """g^i |> h^j x^k = omega^(ik) h^j x^k and g^i <| h^j x^k = g^i epsilon(x^k).

    No root-of-unity check is made here; ``standard_matched_pair`` is the
    validating entry point.
    """
    F = A.field
    omega = F(omega)
    pa, ph = A.presentation, H.presentation
    left, right = [], []
    for y in range(H.dim):
        i = ph.exponents(y)[2]
        lrow, rrow = [], []
        for a in range(A.dim):
            k = pa.exponents(a)[1]
            lrow.append({a: omega ** (i * k)})
            rrow.append({y: F.one} if k == 0 else {})
        left.append(lrow)
        right.append(rrow)
    return MatchedPair(A, H, left, right, omega=omega)


def standard_matched_pair(field, m: int, q, n: int, omega) -> MatchedPair:
    """The matched pair between T_{m^2}(q) and K[C_n] attached to omega in U_n(K)."""
    F = as_field(field)
    q = _check_q(F, m, q)
    omega = _check_omega(F, n, omega)
    return standard_actions(taft(F, m, q), group_algebra(F, n), omega)


def matched_pairs(field, m: int, q, n: int) -> list[MatchedPair]:
    """One standard pair per omega in U_n(K), ordered by powers of the generator."""
    F = as_field(field)
    q = _check_q(F, m, q)
    A, H = taft(F, m, q), group_algebra(F, n)
    return [standard_actions(A, H, w) for w in roots_of_unity(F, n).elements]


# ---------------------------------------------------------------------------
# verification

MATCHED_PAIR_FAMILIES = (
    "left_coalgebra_map",
    "right_coalgebra_map",
    "left_module",
    "right_module",
    "mp1",
    "mp2",
    "mp3",
    "mp4",
)


def _items(table):
    return [tuple(t.items()) for t in table]


def _check_coalgebra_map(name, src_H, src_A, tgt, table, fail_fast) -> Any:
    """Delta(y . a) = sum (y1 . a1) (x) (y2 . a2) and counit compatibility."""
    sweep = _Sweep(name)
    dH, dA = _items(src_H.comult), _items(src_A.comult)
    for y in range(src_H.dim):
        for a in range(src_A.dim):
            rhs: dict = {}
            for (y1, y2), c in dH[y]:
                for (a1, a2), e in dA[a]:
                    V.axpy(rhs, c * e, V.tensor(table[y1][a1], table[y2][a2]))
            ok = sweep.compare((y, a), tgt.comultiply(table[y][a]), rhs)
            ok &= sweep.compare_scalar((y, a, "counit"), tgt.apply_counit(table[y][a]), src_H.counit[y] * src_A.counit[a])
            if fail_fast and not ok:
                return sweep.check
    return sweep.check


def _check_left_module(mp: MatchedPair, fail_fast: bool):
    A, H = mp.A, mp.H
    sweep = _Sweep("left_module")
    for a in range(A.dim):
        if not sweep.compare(("unit", a), mp.act_left(H.one(), A.basis(a)), A.basis(a)) and fail_fast:
            return sweep.check
    for y in range(H.dim):
        for z in range(H.dim):
            yz = H.mult[y][z]
            for a in range(A.dim):
                lhs = mp.act_left(yz, A.basis(a))
                rhs = mp.act_left(H.basis(y), mp.left[z][a])
                if not sweep.compare((y, z, a), lhs, rhs) and fail_fast:
                    return sweep.check
    return sweep.check


def _check_right_module(mp: MatchedPair, fail_fast: bool):
    A, H = mp.A, mp.H
    sweep = _Sweep("right_module")
    for y in range(H.dim):
        if not sweep.compare(("unit", y), mp.act_right(H.basis(y), A.one()), H.basis(y)) and fail_fast:
            return sweep.check
    for y in range(H.dim):
        for a in range(A.dim):
            for b in range(A.dim):
                lhs = mp.act_right(H.basis(y), A.mult[a][b])
                rhs = mp.act_right(mp.right[y][a], A.basis(b))
                if not sweep.compare((y, a, b), lhs, rhs) and fail_fast:
                    return sweep.check
    return sweep.check


def _check_mp1(mp: MatchedPair, fail_fast: bool):
    A, H = mp.A, mp.H
    sweep = _Sweep("mp1")
    for y in range(H.dim):
        ok = sweep.compare(("left", y), mp.act_left(H.basis(y), A.one()), V.scale(H.counit[y], A.one()))
        if fail_fast and not ok:
            return sweep.check
    for a in range(A.dim):
        ok = sweep.compare(("right", a), mp.act_right(H.one(), A.basis(a)), V.scale(A.counit[a], H.one()))
        if fail_fast and not ok:
            return sweep.check
    return sweep.check


def _check_mp2(mp: MatchedPair, fail_fast: bool):
    """y |> (ab) = sum (y1 |> a1) ((y2 <| a2) |> b)."""
    A, H = mp.A, mp.H
    sweep = _Sweep("mp2")
    dH, dA = _items(H.comult), _items(A.comult)
    for y in range(H.dim):
        for a in range(A.dim):
            for b in range(A.dim):
                rhs: dict = {}
                eb = A.basis(b)
                for (y1, y2), c in dH[y]:
                    for (a1, a2), e in dA[a]:
                        w = mp.right[y2][a2]
                        if not w:
                            continue
                        V.axpy(rhs, c * e, A.multiply(mp.left[y1][a1], mp.act_left(w, eb)))
                lhs = mp.act_left(H.basis(y), A.mult[a][b])
                if not sweep.compare((y, a, b), lhs, rhs) and fail_fast:
                    return sweep.check
    return sweep.check


def _check_mp3(mp: MatchedPair, fail_fast: bool):
    """(yz) <| a = sum (y <| (z1 |> a1)) (z2 <| a2)."""
    A, H = mp.A, mp.H
    sweep = _Sweep("mp3")
    dH, dA = _items(H.comult), _items(A.comult)
    for y in range(H.dim):
        ey = H.basis(y)
        for z in range(H.dim):
            for a in range(A.dim):
                rhs: dict = {}
                for (z1, z2), c in dH[z]:
                    for (a1, a2), e in dA[a]:
                        w = mp.right[z2][a2]
                        if not w:
                            continue
                        V.axpy(rhs, c * e, H.multiply(mp.act_right(ey, mp.left[z1][a1]), w))
                lhs = mp.act_right(H.mult[y][z], A.basis(a))
                if not sweep.compare((y, z, a), lhs, rhs) and fail_fast:
                    return sweep.check
    return sweep.check


def _check_mp4(mp: MatchedPair, fail_fast: bool):
    """sum y1 <| a1 (x) y2 |> a2 = sum y2 <| a2 (x) y1 |> a1."""
    A, H = mp.A, mp.H
    sweep = _Sweep("mp4")
    dH, dA = _items(H.comult), _items(A.comult)
    for y in range(H.dim):
        for a in range(A.dim):
            lhs: dict = {}
            rhs: dict = {}
            for (y1, y2), c in dH[y]:
                for (a1, a2), e in dA[a]:
                    V.axpy(lhs, c * e, V.tensor(mp.right[y1][a1], mp.left[y2][a2]))
                    V.axpy(rhs, c * e, V.tensor(mp.right[y2][a2], mp.left[y1][a1]))
            if not sweep.compare((y, a), lhs, rhs) and fail_fast:
                return sweep.check
    return sweep.check


def verify_matched_pair(mp: MatchedPair, fail_fast: bool = False, order=MATCHED_PAIR_FAMILIES) -> AxiomReport:
    """Exhaustive basis check of the matched-pair axioms.

    Both actions must be coalgebra maps, |> a left module, <| a right
    module, and (mp1)-(mp4) hold; (mp1) is y |> 1 = epsilon(y) 1 together
    with 1 <| a = epsilon(a) 1.
    """
    A, H = mp.A, mp.H
    runners = {
        "left_coalgebra_map": lambda: _check_coalgebra_map("left_coalgebra_map", H, A, A, mp.left, fail_fast),
        "right_coalgebra_map": lambda: _check_coalgebra_map("right_coalgebra_map", H, A, H, mp.right, fail_fast),
        "left_module": lambda: _check_left_module(mp, fail_fast),
        "right_module": lambda: _check_right_module(mp, fail_fast),
        "mp1": lambda: _check_mp1(mp, fail_fast),
        "mp2": lambda: _check_mp2(mp, fail_fast),
        "mp3": lambda: _check_mp3(mp, fail_fast),
        "mp4": lambda: _check_mp4(mp, fail_fast),
    }
    report = AxiomReport()
    for name in order:
        check = report.add(runners[name]())
        if fail_fast and not check.passed:
            break
    return report


def transport_report(mp: MatchedPair) -> AxiomReport:
    """Group-likes and skew-primitives are carried to group-likes and
    matching skew-primitives by both actions (checked on the computed
    group-likes and skew-primitive bases)."""
    A, H = mp.A, mp.H
    GA, GH = group_likes(A), group_likes(H)
    report = AxiomReport()
    glike = _Sweep("group_likes_preserved")
    skew_a = _Sweep("skew_primitives_of_A")
    skew_h = _Sweep("skew_primitives_of_H")

    def member(sweep, index, algebra, vec, a, b):
        ok = in_span(algebra.field, skew_primitives(algebra, a, b), vec, algebra.dim)
        sweep.compare_scalar(index, ok, True)

    for ti, t in enumerate(GH):
        for ai, a in enumerate(GA):
            glike.compare_scalar(("left", ti, ai), any(mp.act_left(t, a) == g for g in GA), True)
            glike.compare_scalar(("right", ti, ai), any(mp.act_right(t, a) == g for g in GH), True)
            for bi, b in enumerate(GA):
                for ci, c in enumerate(skew_primitives(A, a, b)):
                    idx = (ti, ai, bi, ci)
                    member(skew_a, idx, A, mp.act_left(t, c), mp.act_left(t, a), mp.act_left(t, b))
                    member(skew_h, idx, H, mp.act_right(t, c), mp.act_right(t, a), mp.act_right(t, b))
        for wi, w in enumerate(GH):
            for zi, z in enumerate(skew_primitives(H, t, w)):
                for ai, a in enumerate(GA):
                    idx = (ti, wi, zi, ai)
                    member(skew_h, idx, H, mp.act_right(z, a), mp.act_right(t, a), mp.act_right(w, a))
                    member(skew_a, idx, A, mp.act_left(z, a), mp.act_left(t, a), mp.act_left(w, a))
    report.add(glike.check)
    report.add(skew_a.check)
    report.add(skew_h.check)
    return report


# ---------------------------------------------------------------------------
# products


def _product_label(a: str, y: str) -> str:
    parts = [s for s in (a, y) if s != "1"]
    return " ".join(parts) or "1"


def _bicrossed(A: HopfAlgebra, H: HopfAlgebra, left: list, right: list, name: str) -> HopfAlgebra:
    F = A.field
    dA, dH = A.dim, H.dim
    d = dA * dH
    mp = MatchedPair(A, H, left, right)

    def join(u: dict, w: dict, coef, acc: dict):
        for a, x in u.items():
            for y, z in w.items():
                key = a * dH + y
                val = coef * x * z
                if key in acc:
                    val = acc[key] + val
                    if val:
                        acc[key] = val
                    else:
                        del acc[key]
                elif val:
                    acc[key] = val

    dH_items, dA_items = _items(H.comult), _items(A.comult)
    mult = [[None] * d for _ in range(d)]
    for a in range(dA):
        for y in range(dH):
            row = mult[a * dH + y]
            for b in range(dA):
                for z in range(dH):
                    acc: dict = {}
                    for (y1, y2), c in dH_items[y]:
                        for (b1, b2), e in dA_items[b]:
                            w = right[y2][b2]
                            if not w:
                                continue
                            u = A.multiply(A.basis(a), left[y1][b1])
                            if u:
                                join(u, H.multiply(w, H.basis(z)), c * e, acc)
                    row[b * dH + z] = acc
    unit: dict = {}
    join(A.unit, H.unit, F.one, unit)
    comult, counit, antipode = [], [], []
    for a in range(dA):
        for y in range(dH):
            t: dict = {}
            for (a1, a2), c in dA_items[a]:
                for (y1, y2), e in dH_items[y]:
                    key = (a1 * dH + y1, a2 * dH + y2)
                    t[key] = t[key] + c * e if key in t else c * e
            comult.append(t)
            counit.append(A.counit[a] * H.counit[y])
            s: dict = {}
            for (a1, a2), c in dA_items[a]:
                for (y1, y2), e in dH_items[y]:
                    u = mp.act_left(H.antipode[y2], A.antipode[a2])
                    w = mp.act_right(H.antipode[y1], A.antipode[a1])
                    join(u, w, c * e, s)
            antipode.append(s)
    labels = [_product_label(la, ly) for la in A.basis_labels for ly in H.basis_labels]
    return HopfAlgebra(
        F,
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        pointed_monomial_basis=A.pointed_monomial_basis and H.pointed_monomial_basis,
        name=name,
    )


def bicrossed_product(mp: MatchedPair, check: bool = True) -> HopfAlgebra:
    """A |><| H: tensor coalgebra with the twisted product and antipode."""
    if check:
        report = verify_matched_pair(mp)
        if not report.passed:
            raise InvalidMatchedPair(report)
    return _bicrossed(mp.A, mp.H, mp.left, mp.right, f"{mp.A.name} |><| {mp.H.name}")


def smash_conditions(A: HopfAlgebra, H: HopfAlgebra, left: list) -> tuple[AxiomReport, AxiomReport]:
    """(module algebra/coalgebra report, symmetry report) for a left action."""
    mp = MatchedPair(A, H, left, trivial_right_action(A, H))
    report = AxiomReport()
    report.add(_check_left_module(mp, False))
    alg = _Sweep("module_algebra")
    dH = _items(H.comult)
    for y in range(H.dim):
        alg.compare(("unit", y), mp.act_left(H.basis(y), A.one()), V.scale(H.counit[y], A.one()))
        for a in range(A.dim):
            for b in range(A.dim):
                rhs: dict = {}
                for (y1, y2), c in dH[y]:
                    V.axpy(rhs, c, A.multiply(left[y1][a], left[y2][b]))
                alg.compare((y, a, b), mp.act_left(H.basis(y), A.mult[a][b]), rhs)
    report.add(alg.check)
    coalg = _check_coalgebra_map("module_coalgebra", H, A, A, left, False)
    report.add(coalg)
    sym = _Sweep("symmetry")
    for y in range(H.dim):
        for a in range(A.dim):
            lhs: dict = {}
            rhs: dict = {}
            for (y1, y2), c in dH[y]:
                V.axpy(lhs, c, V.tensor(H.basis(y1), left[y2][a]))
                V.axpy(rhs, c, V.tensor(H.basis(y2), left[y1][a]))
            sym.compare((y, a), lhs, rhs)
    sym_report = AxiomReport([sym.check])
    return report, sym_report


def smash_product(A: HopfAlgebra, H: HopfAlgebra, left: list, check: bool = True) -> HopfAlgebra:
    """A # H with (a # y)(b # z) = a (y1 |> b) # y2 z."""
    if check:
        module, symmetry = smash_conditions(A, H, left)
        if not module.passed:
            raise NotModuleAlgebra(module)
        if not symmetry.passed:
            raise SymmetryFails(symmetry)
    return _bicrossed(A, H, left, trivial_right_action(A, H), f"{A.name} # {H.name}")
