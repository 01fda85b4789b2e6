"""Shared parameter context for the family T^{xi^t}_{nm^2}(q), 0 <= t < nu(n)."""

from __future__ import annotations

from functools import lru_cache

from ..errors import InvalidParameters
from ..exactmath import Field, FieldElement, roots_of_unity
from ..constructions import as_field, group_algebra, standard_actions, t_quantum_group, taft
from ..constructions.algebras import _check_q


class TaftFamily:
    """Field, q, xi and the algebras T^{xi^t} built lazily per exponent t."""

    def __init__(self, field: Field, m: int, n: int, q: FieldElement | None = None, xi: FieldElement | None = None):
        self.field = field
        self.m = m
        self.n = n
        self.q = _check_q(field, m, q)
        roots = roots_of_unity(field, n)
        self.roots = roots
        self.nu = roots.nu
        if xi is None:
            xi = roots.generator
        else:
            xi = field(xi)
            if xi not in roots.elements or any(xi ** k == 1 for k in range(1, self.nu)):
                raise InvalidParameters(f"{xi} does not generate U_{n}")
        self.xi = xi
        self.A = taft(field, m, self.q)
        self.H = group_algebra(field, n)
        self._pairs: dict = {}
        self._algebras: dict = {}

    def check_exponent(self, t: int) -> int:
        if not isinstance(t, int) or not 0 <= t < self.nu:
            raise InvalidParameters(f"exponent t must satisfy 0 <= t < nu = {self.nu}, got {t}")
        return t

    def omega(self, t: int) -> FieldElement:
        return self.xi ** t

    def pair(self, t: int):
        t = self.check_exponent(t)
        if t not in self._pairs:
            self._pairs[t] = standard_actions(self.A, self.H, self.omega(t))
        return self._pairs[t]

    def algebra(self, t: int):
        t = self.check_exponent(t)
        if t not in self._algebras:
            self._algebras[t] = t_quantum_group(self.field, self.m, self.q, self.n, self.omega(t))
        return self._algebras[t]

    def log_xi(self, x: FieldElement) -> int | None:
        """k in [0, nu) with xi^k = x, if any."""
        power = self.field.one
        for k in range(self.nu):
            if power == x:
                return k
            power = power * self.xi
        return None


@lru_cache(maxsize=64)
def _cached(field: Field, m: int, n: int, q, xi) -> TaftFamily:
    return TaftFamily(field, m, n, q, xi)


def family(m: int, n: int, field, q=None, xi=None) -> TaftFamily:
    F = as_field(field)
    if m < 2:
        raise InvalidParameters(f"Taft order m must be at least 2, got {m}")
    if n < 1:
        raise InvalidParameters(f"group order n must be positive, got {n}")
    q = None if q is None else F(q)
    xi = None if xi is None else F(xi)
    return _cached(F, m, n, q, xi)
