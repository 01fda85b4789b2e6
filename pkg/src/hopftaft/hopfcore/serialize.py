"""Canonical, byte-stable text format for HopfAlgebra structure constants.

Layout (one record per line, entries sorted by index tuple)::

    hopf-algebra v1
    field gf:13
    dim 9
    pointed 1
    label 0 "1"
    unit 0 = 1
    mult 1 2 3 = 12
    comult 4 0 1 = 1
    counit 0 = 1
    antipode 1 2 = 1

``mult i j k = c`` is the coefficient of e_k in e_i e_j, ``comult i j k``
the coefficient of e_j (x) e_k in Delta(e_i), ``antipode i j`` the
coefficient of e_j in S(e_i).  Only nonzero entries are written.
"""

from __future__ import annotations

import json

from ..exactmath import FieldSpec, make_field
from .algebra import HopfAlgebra

HEADER = "hopf-algebra v1"


def dumps(H: HopfAlgebra) -> str:
    fmt = H.field.format_element
    lines = [HEADER, f"field {H.field.spec}", f"dim {H.dim}", f"pointed {int(H.pointed_monomial_basis)}"]
    for i, label in enumerate(H.basis_labels):
        lines.append(f"label {i} {json.dumps(label)}")
    for k in sorted(H.unit):
        lines.append(f"unit {k} = {fmt(H.unit[k])}")
    for i in range(H.dim):
        for j in range(H.dim):
            cell = H.mult[i][j]
            for k in sorted(cell):
                lines.append(f"mult {i} {j} {k} = {fmt(cell[k])}")
    for i in range(H.dim):
        for key in sorted(H.comult[i]):
            lines.append(f"comult {i} {key[0]} {key[1]} = {fmt(H.comult[i][key])}")
    for i in range(H.dim):
        if H.counit[i]:
            lines.append(f"counit {i} = {fmt(H.counit[i])}")
    for i in range(H.dim):
        col = H.antipode[i]
        for j in sorted(col):
            lines.append(f"antipode {i} {j} = {fmt(col[j])}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> HopfAlgebra:
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise ValueError("not a serialized Hopf algebra")
    field = dim = None
    pointed = True
    labels: dict[int, str] = {}
    unit: dict = {}
    mult = comult = counit = antipode = None
    for line in lines[1:]:
        if not line.strip():
            continue
        tag, _, rest = line.partition(" ")
        if tag == "field":
            field = make_field(FieldSpec.parse(rest))
        elif tag == "dim":
            dim = int(rest)
            mult = [[{} for _ in range(dim)] for _ in range(dim)]
            comult = [{} for _ in range(dim)]
            counit = [field.zero] * dim
            antipode = [{} for _ in range(dim)]
        elif tag == "pointed":
            pointed = rest.strip() == "1"
        elif tag == "label":
            idx, _, label = rest.partition(" ")
            labels[int(idx)] = json.loads(label)
        else:
            lhs, _, value = rest.partition(" = ")
            idx = [int(x) for x in lhs.split()]
            c = field.parse_element(value)
            if tag == "unit":
                unit[idx[0]] = c
            elif tag == "mult":
                mult[idx[0]][idx[1]][idx[2]] = c
            elif tag == "comult":
                comult[idx[0]][(idx[1], idx[2])] = c
            elif tag == "counit":
                counit[idx[0]] = c
            elif tag == "antipode":
                antipode[idx[0]][idx[1]] = c
            else:
                raise ValueError(f"unknown record {tag!r}")
    if field is None or dim is None:
        raise ValueError("missing field or dim record")
    return HopfAlgebra(
        field,
        [labels.get(i, str(i)) for i in range(dim)],
        mult,
        unit,
        comult,
        counit,
        antipode,
        pointed_monomial_basis=pointed,
    )
