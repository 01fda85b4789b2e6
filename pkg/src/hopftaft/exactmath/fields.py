"""Exact scalar arithmetic over GF(p) and the cyclotomic fields Q(zeta_M).

Both backends hand out immutable, hashable elements in canonical form, so
equality is a plain comparison of residues or reduced coefficient vectors.
Field handles are cached per spec: ``make_field(spec) is make_field(spec)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterator, Sequence

from ..errors import InvalidParameters, NotPrime
from .numtheory import is_prime
from .polynomials import cyclotomic_polynomial, poly_divmod, poly_ext_gcd

_SPEC_RE = re.compile(r"^\s*(gf|cyc)\s*:\s*(\d+)\s*$")
_MUL_CACHE_LIMIT = 1 << 18


@dataclass(frozen=True)
class FieldSpec:
    """Which field to compute in: ``gf:<p>`` or ``cyc:<M>``."""

    kind: str
    modulus: int

    def __post_init__(self):
        if self.kind not in ("gf", "cyc"):
            raise InvalidParameters(f"unknown field kind {self.kind!r}")
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise InvalidParameters(f"field modulus must be a positive integer, got {self.modulus!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("gf", p)

    @classmethod
    def cyclotomic(cls, M: int) -> "FieldSpec":
        return cls("cyc", M)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        match = _SPEC_RE.match(text)
        if not match:
            raise InvalidParameters(f"cannot parse field spec {text!r}; expected gf:<p> or cyc:<M>")
        return cls(match.group(1), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.kind}:{self.modulus}"


class FieldElement:
    """Shared operator plumbing; concrete backends implement the core ops."""

    __slots__ = ()

    def __radd__(self, other):
        return self + other

    def __rmul__(self, other):
        return self * other

    def __sub__(self, other):
        return self + (-self.field(other))

    def __rsub__(self, other):
        return self.field(other) + (-self)

    def __truediv__(self, other):
        return self * self.field(other).inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __str__(self) -> str:
        return self.field.format_element(self)


class Field:
    """Arithmetic context; call it to coerce ints/Fractions into elements."""

    spec: FieldSpec
    zero: FieldElement
    one: FieldElement

    @property
    def name(self) -> str:
        return str(self.spec)

    @property
    def is_finite(self) -> bool:
        return self.spec.kind == "gf"

    def __repr__(self) -> str:
        return f"make_field({self.spec!r})"

    def __reduce__(self):
        return (make_field, (self.spec,))

    def sum(self, items) -> FieldElement:
        total = self.zero
        for x in items:
            total = total + x
        return total


# ---------------------------------------------------------------------------
# GF(p)


class GFElement(FieldElement):
    __slots__ = ("field", "value")

    def __init__(self, field: "PrimeField", value: int):
        self.field = field
        self.value = value

    def __add__(self, other):
        f = self.field
        if other.__class__ is GFElement and other.field is f:
            return f._table[(self.value + other.value) % f.p]
        if isinstance(other, (int, Rational, FieldElement)):
            return self + f(other)
        return NotImplemented

    def __mul__(self, other):
        f = self.field
        if other.__class__ is GFElement and other.field is f:
            return f._table[self.value * other.value % f.p]
        if isinstance(other, (int, Rational, FieldElement)):
            return self * f(other)
        return NotImplemented

    def __sub__(self, other):
        f = self.field
        if other.__class__ is GFElement and other.field is f:
            return f._table[(self.value - other.value) % f.p]
        return FieldElement.__sub__(self, other)

    def __neg__(self):
        f = self.field
        return f._table[-self.value % f.p]

    def __eq__(self, other):
        if other.__class__ is GFElement:
            return self.value == other.value and self.field.p == other.field.p
        if isinstance(other, int):
            return self.value == other % self.field.p
        if isinstance(other, Rational):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF{self.field.p}({self.value})"

    def inverse(self) -> "GFElement":
        if not self.value:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.field.p})")
        return self.field._table[pow(self.value, -1, self.field.p)]


class _LazyTable:
    """Element cache for large p where a full table would be wasteful."""

    def __init__(self, field: "PrimeField"):
        self.field = field

    def __getitem__(self, v: int) -> GFElement:
        return GFElement(self.field, v)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(p)
        self.spec = FieldSpec.prime(p)
        self.p = p
        if p <= 1 << 16:
            self._table = [GFElement(self, v) for v in range(p)]
        else:
            self._table = _LazyTable(self)
        self.zero = self._table[0]
        self.one = self._table[1]

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value) -> GFElement:
        if isinstance(value, GFElement):
            if value.field.p != self.p:
                raise InvalidParameters(f"cannot coerce an element of GF({value.field.p}) into GF({self.p})")
            return self._table[value.value]
        if isinstance(value, int):
            return self._table[value % self.p]
        if isinstance(value, Rational):
            num, den = value.numerator % self.p, value.denominator % self.p
            if not den:
                raise ZeroDivisionError(f"{value} has a denominator divisible by {self.p}")
            return self._table[num * pow(den, -1, self.p) % self.p]
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def elements(self) -> Iterator[GFElement]:
        for v in range(self.p):
            yield self._table[v]

    def format_element(self, x: GFElement) -> str:
        return str(x.value)

    def parse_element(self, text: str) -> GFElement:
        return self(int(text.strip()))


# ---------------------------------------------------------------------------
# Q(zeta_M)


class CycElement(FieldElement):
    """num/den with num a length-deg(Phi_M) integer vector; gcd(num, den) = 1."""

    __slots__ = ("field", "num", "den", "_key")

    def __init__(self, field: "CyclotomicField", num: tuple, den: int):
        self.field = field
        self.num = num
        self.den = den
        self._key = (num, den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def __add__(self, other):
        f = self.field
        if other.__class__ is not CycElement or other.field is not f:
            if isinstance(other, (int, Rational, FieldElement)):
                return self + f(other)
            return NotImplemented
        ad, bd = self.den, other.den
        if ad == bd:
            return f._make([x + y for x, y in zip(self.num, other.num)], ad)
        return f._make([x * bd + y * ad for x, y in zip(self.num, other.num)], ad * bd)

    def __mul__(self, other):
        f = self.field
        if other.__class__ is not CycElement or other.field is not f:
            if isinstance(other, (int, Rational, FieldElement)):
                return self * f(other)
            return NotImplemented
        key = (self._key, other._key)
        cache = f._mul_cache
        hit = cache.get(key)
        if hit is not None:
            return hit
        result = f._multiply(self, other)
        if len(cache) >= _MUL_CACHE_LIMIT:
            cache.clear()
        cache[key] = result
        return result

    def __neg__(self):
        return CycElement(self.field, tuple(-c for c in self.num), self.den)

    def __eq__(self, other):
        if other.__class__ is CycElement:
            return self._key == other._key and self.field.M == other.field.M
        if isinstance(other, (int, Rational)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        if not any(self.num[1:]):
            return hash(Fraction(self.num[0], self.den))
        return hash(self._key)

    def __bool__(self):
        return any(self.num)

    def __repr__(self):
        return f"Cyc{self.field.M}({self.field.format_element(self)})"

    def inverse(self) -> "CycElement":
        return self.field._invert(self)


class CyclotomicField(Field):
    """Q adjoined zeta, a primitive M-th root of unity, reduced mod Phi_M."""

    def __init__(self, M: int):
        self.spec = FieldSpec.cyclotomic(M)
        self.M = M
        self.phi = cyclotomic_polynomial(M)
        self.degree = D = len(self.phi) - 1
        # red[k] = coefficients of x^k mod Phi_M for 0 <= k <= max(2D - 2, 1)
        top = max(2 * D - 2, 1)
        red = []
        for k in range(top + 1):
            _, rem = poly_divmod([0] * k + [1], self.phi)
            red.append(tuple(int(c) for c in rem) + (0,) * (D - len(rem)))
        self._red = red
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}
        self.zero = CycElement(self, (0,) * D, 1)
        self.one = self._make([1] + [0] * (D - 1), 1)
        self.zeta = self._make(list(red[1]), 1)
        # every root of unity in Q(zeta_M) has order dividing this
        self.unity_order = M if M % 2 == 0 else 2 * M
        self._unity_gen = self.zeta if M % 2 == 0 else -self.zeta

    @property
    def characteristic(self) -> int:
        return 0

    def _make(self, num, den: int) -> CycElement:
        if den < 0:
            num, den = [-c for c in num], -den
        g = gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        return CycElement(self, tuple(num), den)

    def _multiply(self, a: CycElement, b: CycElement) -> CycElement:
        D = self.degree
        prod = [0] * (2 * D - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        res = prod[:D]
        red = self._red
        for k in range(D, 2 * D - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(red[k]):
                    if r:
                        res[i] += c * r
        return self._make(res, a.den * b.den)

    def _invert(self, a: CycElement) -> CycElement:
        if not a:
            raise ZeroDivisionError(f"0 has no inverse in Q(zeta_{self.M})")
        hit = self._inv_cache.get(a._key)
        if hit is not None:
            return hit
        g, s, _ = poly_ext_gcd(list(a.coeffs), self.phi)
        assert g == [1], "Phi_M is irreducible, so gcd must be 1"
        _, rem = poly_divmod(s, self.phi)
        result = self.from_coeffs(rem)
        assert result * a == self.one
        self._inv_cache[a._key] = result
        return result

    def from_coeffs(self, coeffs: Sequence) -> CycElement:
        """Element sum c_i zeta^i; coefficients beyond the degree are reduced."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        D = self.degree
        num = [0] * D
        for k, c in enumerate(ints):
            if not c:
                continue
            if k < D:
                num[k] += c
            else:
                _, rem = poly_divmod([0] * k + [1], self.phi)
                for i, r in enumerate(rem):
                    num[i] += c * int(r)
        return self._make(num, den)

    def zeta_power(self, k: int) -> CycElement:
        return self.zeta ** (k % self.M)

    def __call__(self, value) -> CycElement:
        if isinstance(value, CycElement):
            if value.field.M != self.M:
                raise InvalidParameters(f"cannot coerce an element of Q(zeta_{value.field.M}) into Q(zeta_{self.M})")
            return value if value.field is self else CycElement(self, value.num, value.den)
        if isinstance(value, int):
            return self._make([value] + [0] * (self.degree - 1), 1)
        if isinstance(value, Rational):
            return self._make([value.numerator] + [0] * (self.degree - 1), value.denominator)
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise TypeError(f"cannot coerce {value!r} into Q(zeta_{self.M})")

    def format_element(self, x: CycElement) -> str:
        return "[" + ",".join(_fmt_fraction(c) for c in x.coeffs) + "]"

    def parse_element(self, text: str) -> CycElement:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise InvalidParameters(f"cyclotomic literal must look like [a/b,...], got {text!r}")
        parts = [p for p in body[1:-1].split(",") if p.strip()]
        return self.from_coeffs([Fraction(p.strip()) for p in parts])


def _fmt_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


@lru_cache(maxsize=None)
def make_field(spec: FieldSpec | str) -> Field:
    """Arithmetic context for ``spec``; one shared handle per spec."""
    if isinstance(spec, str):
        return make_field(FieldSpec.parse(spec))
    if spec.kind == "gf":
        return PrimeField(spec.modulus)
    return CyclotomicField(spec.modulus)


def GF(p: int) -> PrimeField:
    return make_field(FieldSpec.prime(p))


def QZeta(M: int) -> CyclotomicField:
    return make_field(FieldSpec.cyclotomic(M))
