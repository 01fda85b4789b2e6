"""Exhaustive search for matched pairs between T_{m^2}(q) and K[C_n] over GF(p).

A matched pair is determined by what each group element g^i does to the
generators h and x.  Group-likes and skew-primitives are carried to
group-likes and matching skew-primitives by both actions, so for every i

    g^i |> h = h^t             g^i |> x in P_{h^t, 1}(A)
    g^i <| h = g^c             g^i <| x in P_{g^c, g^i}(H)

and over a finite field the skew-primitive spaces are finite.  Each choice
is pruned by the symmetry axiom on (g^i, x), extended to all of A by
induction on word length, and then checked against every axiom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import BudgetExceeded, InvalidParameters
from ..exactmath import FieldElement, PrimeField
from ..hopfcore import skew_primitives
from ..hopfcore import vectors as V
from .algebras import _check_q, as_field, group_algebra, taft
from .matched import MatchedPair, verify_matched_pair

DEFAULT_BUDGET = 20_000

# cheap families first so that bad candidates die early
_SEARCH_ORDER = ("mp1", "mp4", "left_module", "right_module", "mp2", "mp3", "left_coalgebra_map", "right_coalgebra_map")


@dataclass(frozen=True)
class SearchCandidate:
    """Generator data for one group element g^power.

    g |> h = h^t_exp, g |> x = alpha (1 - h^t_exp) + beta_or_gamma x,
    g <| h = g^c_exp, g <| x = mu (g - g^c_exp).
    """

    power: int
    t_exp: int
    c_exp: int
    alpha: FieldElement
    beta_or_gamma: FieldElement
    mu: FieldElement
    left_x: tuple  # sorted items of g |> x
    right_x: tuple  # sorted items of g <| x


def _span_elements(F, basis):
    if not basis:
        yield {}
        return
    for coeffs in itertools.product(list(F.elements()), repeat=len(basis)):
        acc: dict = {}
        for c, b in zip(coeffs, basis):
            if c:
                V.axpy(acc, c, b)
        yield acc


def _local_candidates(A, H, i: int) -> list[SearchCandidate]:
    F = A.field
    pa, ph = A.presentation, H.presentation
    m, n = pa.m, ph.n
    x_idx = pa.index(0, 1)
    g_i = ph.vector(i=i)
    out = []
    for t in range(m):
        ht = pa.vector(j=t)
        left_space = skew_primitives(A, ht, A.one())
        for c in range(n):
            gc = ph.vector(i=c)
            right_space = skew_primitives(H, gc, g_i)
            for lx in _span_elements(F, left_space):
                for rx in _span_elements(F, right_space):
                    # symmetry on (g^i, x): (y<|x)(x)h^t + y(x)(y|>x) == g^c(x)(y|>x) + (y<|x)(x)1
                    lhs = V.add(V.tensor(rx, ht), V.tensor(g_i, lx))
                    rhs = V.add(V.tensor(gc, lx), V.tensor(rx, A.one()))
                    if lhs != rhs:
                        continue
                    h_t_idx = pa.index(t, 0)
                    alpha = -lx.get(h_t_idx, F.zero) if t else F.zero
                    beta = lx.get(x_idx, F.zero)
                    mu = rx.get(i, F.zero) if c != i else F.zero
                    out.append(
                        SearchCandidate(
                            power=i,
                            t_exp=t,
                            c_exp=c,
                            alpha=alpha,
                            beta_or_gamma=beta,
                            mu=mu,
                            left_x=tuple(sorted(lx.items())),
                            right_x=tuple(sorted(rx.items())),
                        )
                    )
    return out


def extend_actions(A, H, data: dict) -> MatchedPair:
    """Full action tensors from generator data.

    ``data[i] = (g^i |> h, g^i |> x, g^i <| h, g^i <| x)``.  Monomials are
    split as h * rest or x * rest and expanded with
    y |> (a b) = sum (y1 |> a1)((y2 <| a2) |> b) and y <| (a b) = (y <| a) <| b.
    """
    pa = A.presentation
    dA, dH = A.dim, H.dim
    left = [[None] * dA for _ in range(dH)]
    right = [[None] * dA for _ in range(dH)]
    unit_a = pa.index(0, 0)
    h_idx, x_idx = pa.index(1, 0), pa.index(0, 1)
    for y in range(dH):
        left[y][unit_a] = dict(A.one())
        right[y][unit_a] = H.basis(y)
        lh, lx, rh, rx = data[y]
        left[y][h_idx], left[y][x_idx] = dict(lh), dict(lx)
        right[y][h_idx], right[y][x_idx] = dict(rh), dict(rx)

    def act_left(w: dict, a: int) -> dict:
        acc: dict = {}
        for z, c in w.items():
            V.axpy(acc, c, left[z][a])
        return acc

    def act_right(w: dict, a: int) -> dict:
        acc: dict = {}
        for z, c in w.items():
            V.axpy(acc, c, right[z][a])
        return acc

    order = sorted(range(dA), key=lambda a: sum(pa.exponents(a)[:2]))
    for a in order:
        j, k, _ = pa.exponents(a)
        if j + k <= 1:
            continue
        if j > 0:
            rest = pa.index(j - 1, k)
            for y in range(dH):
                yh = right[y][h_idx]
                left[y][a] = A.multiply(left[y][h_idx], act_left(yh, rest))
                right[y][a] = act_right(yh, rest)
        else:
            rest = pa.index(0, k - 1)
            for y in range(dH):
                yh, yx = right[y][h_idx], right[y][x_idx]
                val = A.multiply(left[y][x_idx], act_left(yh, rest))
                V.axpy(val, A.field.one, act_left(yx, rest))
                left[y][a] = val
                right[y][a] = act_right(yx, rest)
    return MatchedPair(A, H, left, right)


def matched_pair_search(field, m: int, q, n: int, budget: int = DEFAULT_BUDGET) -> list[MatchedPair]:
    """All matched pairs (T_{m^2}(q), K[C_n]) over a small prime field.

    Raises BudgetExceeded when the pruned candidate product exceeds
    ``budget``; p <= 7, m <= 3, n <= 3 fits the default.
    """
    F = as_field(field)
    if not isinstance(F, PrimeField):
        raise InvalidParameters("matched_pair_search needs a prime field")
    q = _check_q(F, m, q)
    A, H = taft(F, m, q), group_algebra(F, n)
    pa, ph = A.presentation, H.presentation
    per_power = [_local_candidates(A, H, i) for i in range(1, n)]
    total = 1
    for cands in per_power:
        total *= len(cands)
    if total > budget:
        raise BudgetExceeded(total, budget, "matched pair search")

    identity = (pa.vector(j=1), pa.vector(k=1), ph.vector(i=0), {})
    survivors = []
    for choice in itertools.product(*per_power):
        data = {0: identity}
        for cand in choice:
            data[cand.power] = (
                pa.vector(j=cand.t_exp),
                dict(cand.left_x),
                ph.vector(i=cand.c_exp),
                dict(cand.right_x),
            )
        mp = extend_actions(A, H, data)
        if verify_matched_pair(mp, fail_fast=True, order=_SEARCH_ORDER).passed:
            omega = choice[0].beta_or_gamma if choice else F.one
            survivors.append(MatchedPair(A, H, mp.left, mp.right, omega=omega, candidates=choice))
    return survivors
