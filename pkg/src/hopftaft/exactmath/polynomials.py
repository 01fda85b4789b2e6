"""Dense univariate polynomials as little-endian coefficient lists.

Only what the cyclotomic backend needs: exact division, remainders and
the extended Euclidean algorithm over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Poly = list  # little-endian coefficients, trailing zeros stripped


def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    p = trim(p)
    return len(p) - 1 if p else -1


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Quotient and remainder; exact over Fractions, or over ints for monic b."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(a)
    lead = b[-1]
    monic = lead == 1
    quo = [0] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = rem[-1] if monic else Fraction(rem[-1]) / lead
        quo[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        rem = trim(rem)
    return trim(quo), rem


def poly_exact_div(a: Sequence, b: Sequence) -> list:
    quo, rem = poly_divmod(a, b)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    return quo


def poly_ext_gcd(a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Return (g, s, t) with s*a + t*b = g, g monic, all over Fractions."""
    r0, r1 = [Fraction(c) for c in trim(a)], [Fraction(c) for c in trim(b)]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(quo, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


@lru_cache(maxsize=None)
def _cyclotomic(M: int) -> tuple[int, ...]:
    num = [-1] + [0] * (M - 1) + [1]  # x^M - 1
    for d in range(1, M):
        if M % d == 0:
            num = poly_exact_div(num, list(_cyclotomic(d)))
    return tuple(int(c) for c in num)


def cyclotomic_polynomial(M: int) -> list[int]:
    """The M-th cyclotomic polynomial, little-endian integer coefficients.

    Computed by dividing x^M - 1 by Phi_d for every proper divisor d of M.

    >>> cyclotomic_polynomial(12)
    [1, 0, -1, 0, 1]
    """
    if M < 1:
        raise ValueError(f"cyclotomic_polynomial expects M >= 1, got {M}")
    return list(_cyclotomic(M))
