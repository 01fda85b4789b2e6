"""Sparse coefficient vectors: dict index -> nonzero FieldElement.

Tensors of two (or three) vectors use tuple keys.  Every helper here
returns zero-pruned dicts, so plain ``==`` is exact equality.
"""

from __future__ import annotations

from typing import Hashable, Iterable

Vec = dict


def prune(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


def axpy(acc: dict, c, v: dict) -> dict:
    """acc += c * v in place (zeros removed); returns acc."""
    for k, x in v.items():
        y = c * x
        if k in acc:
            y = acc[k] + y
            if y:
                acc[k] = y
            else:
                del acc[k]
        elif y:
            acc[k] = y
    return acc


def add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        if k in out:
            y = out[k] + x
            if y:
                out[k] = y
            else:
                del out[k]
        else:
            out[k] = x
    return out


def sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        if k in out:
            y = out[k] - x
            if y:
                out[k] = y
            else:
                del out[k]
        else:
            out[k] = -x
    return out


def scale(c, v: dict) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def combine(terms: Iterable[tuple]) -> dict:
    """Sum of c * v over (c, v) pairs."""
    acc: dict = {}
    for c, v in terms:
        axpy(acc, c, v)
    return acc


def tensor(u: dict, v: dict) -> dict:
    return {(i, j): a * b for i, a in u.items() for j, b in v.items()}


def first_difference(u: dict, v: dict) -> Hashable | None:
    """Smallest key where the two vectors disagree, or None if equal."""
    if u == v:
        return None
    keys = sorted(set(u) | set(v))
    for k in keys:
        a, b = u.get(k), v.get(k)
        if not a and not b:
            continue
        if not a or not b or a != b:
            return k
    return None
