"""Normal-form rewriting for algebras with a q-commuting ordered monomial basis.

Generators are ordered g_0 < g_1 < ...; each is either cyclic (g^N = 1) or
nilpotent (g^N = 0), and every out-of-order pair obeys a commutation rule
g_b g_a = c_ba g_a g_b for a < b.  Every word then rewrites to a scalar times
an ordered monomial g_0^e_0 g_1^e_1 ..., indexed in mixed radix with g_0
most significant.

Structure constants come from right-multiplying a normal monomial by one
generator at a time: pushing g_t left past g_s^e (s > t) costs c_st^e.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from ..exactmath import Field, FieldElement
from ..hopfcore import HopfAlgebra

CYCLIC = "cyclic"
NILPOTENT = "nilpotent"


@dataclass(frozen=True)
class Generator:
    name: str
    order: int
    kind: str  # CYCLIC or NILPOTENT


@dataclass
class QCommutingSystem:
    field: Field
    generators: Sequence[Generator]
    commutation: dict = dc_field(default_factory=dict)  # (b, a) with a < b -> c_ba

    def __post_init__(self):
        self.generators = tuple(self.generators)
        self.radices = tuple(g.order for g in self.generators)
        self.dim = 1
        for r in self.radices:
            self.dim *= r
        self.exponents = list(itertools.product(*(range(r) for r in self.radices)))
        self._index = {e: i for i, e in enumerate(self.exponents)}

    def index(self, exps: Sequence[int]) -> int:
        return self._index[tuple(exps)]

    def label(self, i: int) -> str:
        parts = [f"{g.name}^{e}" for g, e in zip(self.generators, self.exponents[i]) if e]
        return " ".join(parts) or "1"

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dim)]

    def generator_index(self, t: int) -> int:
        exps = [0] * len(self.generators)
        exps[t] = 1
        return self.index(exps)

    def _times_generator(self, exps: tuple, t: int) -> tuple[FieldElement, tuple] | None:
        F = self.field
        coef = F.one
        for s in range(t + 1, len(exps)):
            if exps[s]:
                c = self.commutation.get((s, t), F.one)
                coef = coef * c ** exps[s]
        new = list(exps)
        new[t] += 1
        gen = self.generators[t]
        if new[t] == gen.order:
            if gen.kind == NILPOTENT:
                return None
            new[t] = 0
        return coef, tuple(new)

    def multiply_monomials(self, i: int, j: int) -> dict:
        """e_i * e_j as a sparse vector, by feeding e_j's letters one by one."""
        coef = self.field.one
        cur = self.exponents[i]
        for t, e in enumerate(self.exponents[j]):
            for _ in range(e):
                step = self._times_generator(cur, t)
                if step is None:
                    return {}
                c, cur = step
                coef = coef * c
        return {self.index(cur): coef} if coef else {}

    def multiplication_table(self) -> list[list[dict]]:
        return [[self.multiply_monomials(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def build_hopf(
        self,
        delta: dict[int, dict],
        counit: dict[int, FieldElement],
        antipode: dict[int, dict],
        *,
        presentation=None,
        name: str = "",
    ) -> HopfAlgebra:
        """Hopf algebra whose Delta, epsilon are multiplicative and S anti-multiplicative.

        ``delta``, ``counit`` and ``antipode`` give the values on each
        generator (keyed by generator position); monomials are expanded
        in order, reversed for the antipode.
        """
        F = self.field
        mult = self.multiplication_table()
        unit = {self.index([0] * len(self.generators)): F.one}
        partial = HopfAlgebra(F, self.labels(), mult, unit, [{}] * self.dim, [F.zero] * self.dim, [{}] * self.dim)
        comult, eps, anti = [], [], []
        for exps in self.exponents:
            d = {(k, k): F.one for k in unit}
            e = F.one
            s = dict(unit)
            for t, power in enumerate(exps):
                for _ in range(power):
                    d = partial.tensor_multiply(d, delta[t])
                    e = e * counit[t]
                    s = partial.multiply(antipode[t], s)
            comult.append(d)
            eps.append(e)
            anti.append(s)
        return HopfAlgebra(
            F,
            self.labels(),
            mult,
            unit,
            comult,
            eps,
            anti,
            pointed_monomial_basis=True,
            presentation=presentation,
            name=name,
        )


def monomial(system: QCommutingSystem, **exps: int) -> dict:
    """Sparse basis vector of a monomial named by generator exponents."""
    full = [0] * len(system.generators)
    names = [g.name for g in system.generators]
    for name, e in exps.items():
        t = names.index(name)
        g = system.generators[t]
        if g.kind == NILPOTENT and e >= g.order:
            return {}
        full[t] = e % g.order
    return {system.index(full): system.field.one}


__all__ = ["CYCLIC", "NILPOTENT", "Generator", "QCommutingSystem", "monomial"]
