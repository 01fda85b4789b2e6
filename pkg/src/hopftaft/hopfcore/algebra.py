"""Finite-dimensional Hopf algebras given by structure constants.

A :class:`HopfAlgebra` stores sparse tensors over a fixed basis:

* ``mult[i][j]``  - coefficients of e_i * e_j
* ``unit``        - coefficients of 1
* ``comult[i]``   - {(j, k): c} for Delta(e_i) = sum c e_j (x) e_k
* ``counit[i]``   - epsilon(e_i)
* ``antipode[i]`` - coefficients of S(e_i)
"""

from __future__ import annotations

import itertools
from typing import Any, Sequence

from ..errors import BudgetExceeded
from ..exactmath import Field, FieldElement, Matrix, rref_sparse
from ..exactmath.linalg import kernel_from_rref
from . import vectors as V
from .report import AxiomCheck, AxiomReport, _Sweep

AXIOM_FAMILIES = ("associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode")


class HopfAlgebra:
    """Structure-constant record of a Hopf algebra; treat as immutable."""

    def __init__(
        self,
        field: Field,
        basis_labels: Sequence[str],
        mult: Sequence[Sequence[dict]],
        unit: dict,
        comult: Sequence[dict],
        counit: Sequence[FieldElement],
        antipode: Sequence[dict],
        *,
        pointed_monomial_basis: bool = True,
        presentation: Any = None,
        name: str = "",
    ):
        d = len(basis_labels)
        if len(mult) != d or any(len(row) != d for row in mult):
            raise ValueError("multiplication table must be dim x dim")
        if len(comult) != d or len(counit) != d or len(antipode) != d:
            raise ValueError("comultiplication, counit and antipode must have dim entries")
        self.field = field
        self.dim = d
        self.basis_labels = tuple(basis_labels)
        self.mult = [[V.prune(cell) for cell in row] for row in mult]
        self.unit = V.prune(unit)
        self.comult = [V.prune(t) for t in comult]
        self.counit = [field(c) for c in counit]
        self.antipode = [V.prune(col) for col in antipode]
        self.pointed_monomial_basis = pointed_monomial_basis
        self.presentation = presentation
        self.name = name

    @property
    def spec(self):
        return self.field.spec

    def __repr__(self) -> str:
        label = self.name or "HopfAlgebra"
        return f"<{label} dim={self.dim} over {self.field.name}>"

    # -- elementwise operations -------------------------------------------

    def basis(self, i: int) -> dict:
        return {i: self.field.one}

    def one(self) -> dict:
        return dict(self.unit)

    def multiply(self, u: dict, v: dict) -> dict:
        acc: dict = {}
        mult = self.mult
        for i, a in u.items():
            row = mult[i]
            for j, b in v.items():
                cell = row[j]
                if cell:
                    V.axpy(acc, a * b, cell)
        return acc

    def comultiply(self, u: dict) -> dict:
        acc: dict = {}
        for i, a in u.items():
            V.axpy(acc, a, self.comult[i])
        return acc

    def apply_counit(self, u: dict) -> FieldElement:
        return self.field.sum(a * self.counit[i] for i, a in u.items())

    def apply_antipode(self, u: dict) -> dict:
        acc: dict = {}
        for i, a in u.items():
            V.axpy(acc, a, self.antipode[i])
        return acc

    def power(self, u: dict, k: int) -> dict:
        out = self.one()
        for _ in range(k):
            out = self.multiply(out, u)
        return out

    def tensor_multiply(self, s: dict, t: dict) -> dict:
        """Product in H (x) H of two tensors keyed by (left, right) index."""
        acc: dict = {}
        mult = self.mult
        for (a, b), c in s.items():
            for (a2, b2), c2 in t.items():
                left, right = mult[a][a2], mult[b][b2]
                if left and right:
                    coef = c * c2
                    for x, p in left.items():
                        for y, r in right.items():
                            key = (x, y)
                            val = coef * p * r
                            if key in acc:
                                val = acc[key] + val
                                if val:
                                    acc[key] = val
                                else:
                                    del acc[key]
                            elif val:
                                acc[key] = val
        return acc

    def format(self, u: dict) -> str:
        if not u:
            return "0"
        parts = []
        for i in sorted(u):
            c = u[i]
            label = self.basis_labels[i] or "1"
            parts.append(label if c == 1 else f"({c})*{label}")
        return " + ".join(parts)

    def antipode_matrix(self) -> Matrix:
        return Matrix.from_sparse_columns(self.field, self.antipode, self.dim)


# ---------------------------------------------------------------------------
# comparisons


def structure_diff(A: HopfAlgebra, B: HopfAlgebra) -> str | None:
    """First structure-constant disagreement between A and B, or None."""
    if A.field.spec != B.field.spec:
        return f"fields differ: {A.field.name} vs {B.field.name}"
    if A.dim != B.dim:
        return f"dimensions differ: {A.dim} vs {B.dim}"
    for i in range(A.dim):
        for j in range(A.dim):
            if A.mult[i][j] != B.mult[i][j]:
                return f"mult[{i}][{j}]: {A.format(A.mult[i][j])} vs {B.format(B.mult[i][j])}"
    if A.unit != B.unit:
        return "unit differs"
    for i in range(A.dim):
        if A.comult[i] != B.comult[i]:
            return f"comult[{i}] differs"
        if A.counit[i] != B.counit[i]:
            return f"counit[{i}] differs"
        if A.antipode[i] != B.antipode[i]:
            return f"antipode[{i}]: {A.format(A.antipode[i])} vs {B.format(B.antipode[i])}"
    return None


def same_structure(A: HopfAlgebra, B: HopfAlgebra) -> bool:
    return structure_diff(A, B) is None


# ---------------------------------------------------------------------------
# axiom verification


def verify_hopf(H: HopfAlgebra, fail_fast: bool = False) -> AxiomReport:
    """Exhaustive check of all Hopf algebra axioms on basis index tuples.

    Families: associativity, unit, coassociativity, counit, bialgebra
    (Delta and epsilon multiplicative and unital) and antipode (both
    convolution identities).  Each failing family records its first
    witness.  With ``fail_fast`` the sweep stops at the first failure.
    """
    report = AxiomReport()
    for family in (_check_assoc, _check_unit, _check_coassoc, _check_counit, _check_bialgebra, _check_antipode):
        check = family(H, fail_fast)
        report.add(check)
        if fail_fast and not check.passed:
            break
    return report


def _check_assoc(H: HopfAlgebra, fail_fast: bool) -> AxiomCheck:
    sweep = _Sweep("associativity")
    d = H.dim
    items = [[tuple(cell.items()) for cell in row] for row in H.mult]
    for i in range(d):
        it_i = items[i]
        for j in range(d):
            pij = it_i[j]
            it_j = items[j]
            for k in range(d):
                left: dict = {}
                for r, c in pij:
                    for t, e in items[r][k]:
                        left[t] = left[t] + c * e if t in left else c * e
                right: dict = {}
                for s, c in it_j[k]:
                    for t, e in it_i[s]:
                        right[t] = right[t] + c * e if t in right else c * e
                if left != right and not sweep.compare((i, j, k), V.prune(left), V.prune(right)):
                    if fail_fast:
                        return sweep.check
                else:
                    sweep.check.checked += 1
    return sweep.check


def _check_unit(H: HopfAlgebra, fail_fast: bool) -> AxiomCheck:
    sweep = _Sweep("unit")
    one = H.one()
    for i in range(H.dim):
        e = H.basis(i)
        ok = sweep.compare((i, 0), H.multiply(one, e), e) & sweep.compare((i, 1), H.multiply(e, one), e)
        if fail_fast and not ok:
            break
    return sweep.check


def _delta_left(H: HopfAlgebra, t: dict) -> dict:
    acc: dict = {}
    for (j, k), c in t.items():
        for (a, b), e in H.comult[j].items():
            key = (a, b, k)
            acc[key] = acc[key] + c * e if key in acc else c * e
    return V.prune(acc)


def _delta_right(H: HopfAlgebra, t: dict) -> dict:
    acc: dict = {}
    for (j, k), c in t.items():
        for (a, b), e in H.comult[k].items():
            key = (j, a, b)
            acc[key] = acc[key] + c * e if key in acc else c * e
    return V.prune(acc)


def _check_coassoc(H: HopfAlgebra, fail_fast: bool) -> AxiomCheck:
    sweep = _Sweep("coassociativity")
    for i in range(H.dim):
        t = H.comult[i]
        if not sweep.compare((i,), _delta_left(H, t), _delta_right(H, t)) and fail_fast:
            break
    return sweep.check


def _check_counit(H: HopfAlgebra, fail_fast: bool) -> AxiomCheck:
    sweep = _Sweep("counit")
    eps = H.counit
    for i in range(H.dim):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H.comult[i].items():
            V.axpy(left, c * eps[j], {k: H.field.one})
            V.axpy(right, c * eps[k], {j: H.field.one})
        e = H.basis(i)
        ok = sweep.compare((i, 0), left, e) & sweep.compare((i, 1), right, e)
        if fail_fast and not ok:
            break
    return sweep.check


def _check_bialgebra(H: HopfAlgebra, fail_fast: bool) -> AxiomCheck:
    sweep = _Sweep("bialgebra")
    F = H.field
    one = H.one()
    ok = sweep.compare(("delta_unit",), H.comultiply(one), V.tensor(one, one))
    ok &= sweep.compare_scalar(("counit_unit",), H.apply_counit(one), F.one)
    if fail_fast and not ok:
        return sweep.check
    for i in range(H.dim):
        for j in range(H.dim):
            prod = H.mult[i][j]
            lhs = H.comultiply(prod)
            rhs = H.tensor_multiply(H.comult[i], H.comult[j])
            ok = sweep.compare((i, j), lhs, rhs)
            ok &= sweep.compare_scalar((i, j, "counit"), H.apply_counit(prod), H.counit[i] * H.counit[j])
            if fail_fast and not ok:
                return sweep.check
    return sweep.check


def _check_antipode(H: HopfAlgebra, fail_fast: bool) -> AxiomCheck:
    sweep = _Sweep("antipode")
    one = H.one()
    for i in range(H.dim):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H.comult[i].items():
            V.axpy(left, c, H.multiply(H.antipode[j], H.basis(k)))
            V.axpy(right, c, H.multiply(H.basis(j), H.antipode[k]))
        expected = V.scale(H.counit[i], one)
        ok = sweep.compare((i, 0), left, expected) & sweep.compare((i, 1), right, expected)
        if fail_fast and not ok:
            break
    return sweep.check


# ---------------------------------------------------------------------------
# group-likes and skew-primitives


def is_group_like(H: HopfAlgebra, v: dict) -> bool:
    return H.comultiply(v) == V.tensor(v, v) and H.apply_counit(v) == 1


def group_likes(H: HopfAlgebra, *, brute_force: bool = False, budget: int = 1_000_000) -> list[dict]:
    """All group-like elements.

    Under the pointed-monomial promise only basis monomials are scanned.
    Otherwise (or when ``brute_force`` is set) every vector of a GF(p)
    algebra is tried, provided p**dim fits in ``budget``.
    """
    if H.pointed_monomial_basis and not brute_force:
        found = [H.basis(i) for i in range(H.dim) if is_group_like(H, H.basis(i))]
    else:
        if not H.field.is_finite:
            raise BudgetExceeded(-1, budget, "group-like brute force over an infinite field")
        size = H.field.order ** H.dim
        if size > budget:
            raise BudgetExceeded(size, budget, "group-like brute force")
        elems = list(H.field.elements())
        found = []
        for coeffs in itertools.product(elems, repeat=H.dim):
            v = {i: c for i, c in enumerate(coeffs) if c}
            if v and is_group_like(H, v):
                found.append(v)
        found.sort(key=lambda v: [(k, str(c)) for k, c in sorted(v.items())])
    assert all(is_group_like(H, v) for v in found)
    return found


def skew_primitives(H: HopfAlgebra, a: dict, b: dict) -> list[dict]:
    """Basis of P_{a,b}(H) = {c : Delta(c) = c (x) a + b (x) c}, in RREF-normalized form."""
    rows: dict = {}

    def put(key, col, val):
        row = rows.setdefault(key, {})
        y = row[col] + val if col in row else val
        if y:
            row[col] = y
        else:
            row.pop(col, None)

    for i in range(H.dim):
        for key, c in H.comult[i].items():
            put(key, i, c)
        for k, c in a.items():
            put((i, k), i, -c)
        for j, c in b.items():
            put((j, i), i, -c)
    prows, pivots = rref_sparse(H.field, (rows[k] for k in sorted(rows)), H.dim)
    basis = kernel_from_rref(H.field, prows, pivots, H.dim)
    for c in basis:
        assert H.comultiply(c) == V.add(V.tensor(c, a), V.tensor(b, c))
    return basis


def in_span(field: Field, basis: Sequence[dict], v: dict, dim: int) -> bool:
    """Whether v lies in the span of the given sparse vectors."""
    base_rank = len(rref_sparse(field, basis, dim)[1])
    return len(rref_sparse(field, list(basis) + [v], dim)[1]) == base_rank


# ---------------------------------------------------------------------------
# tensor products


def tensor_product_hopf(A: HopfAlgebra, B: HopfAlgebra) -> HopfAlgebra:
    """A (x) B with componentwise structure; basis index a * dim(B) + b."""
    if A.field.spec != B.field.spec:
        raise ValueError("tensor factors must share a field")
    F = A.field
    dA, dB = A.dim, B.dim

    def idx(a, b):
        return a * dB + b

    def lift(u: dict, v: dict) -> dict:
        return {idx(a, b): x * y for a, x in u.items() for b, y in v.items()}

    labels = [f"{la} (x) {lb}" for la in A.basis_labels for lb in B.basis_labels]
    mult = [[{} for _ in range(dA * dB)] for _ in range(dA * dB)]
    for a1, b1, a2, b2 in itertools.product(range(dA), range(dB), range(dA), range(dB)):
        mult[idx(a1, b1)][idx(a2, b2)] = lift(A.mult[a1][a2], B.mult[b1][b2])
    comult = []
    counit = []
    antipode = []
    for a in range(dA):
        for b in range(dB):
            t: dict = {}
            for (a1, a2), x in A.comult[a].items():
                for (b1, b2), y in B.comult[b].items():
                    t[(idx(a1, b1), idx(a2, b2))] = x * y
            comult.append(t)
            counit.append(A.counit[a] * B.counit[b])
            antipode.append(lift(A.antipode[a], B.antipode[b]))
    return HopfAlgebra(
        F,
        labels,
        mult,
        lift(A.unit, B.unit),
        comult,
        counit,
        antipode,
        pointed_monomial_basis=A.pointed_monomial_basis and B.pointed_monomial_basis,
        name=f"{A.name or 'A'} (x) {B.name or 'B'}",
    )


# ---------------------------------------------------------------------------
# linear maps between Hopf algebras


class LinearMap:
    """Linear map source -> target stored as sparse images of basis vectors."""

    def __init__(self, source: HopfAlgebra, target: HopfAlgebra, columns: Sequence[dict]):
        if len(columns) != source.dim:
            raise ValueError(f"need {source.dim} columns, got {len(columns)}")
        if any(k >= target.dim or k < 0 for col in columns for k in col):
            raise ValueError("column index outside target basis")
        self.source = source
        self.target = target
        self.columns = [V.prune(c) for c in columns]

    @classmethod
    def identity(cls, H: HopfAlgebra) -> "LinearMap":
        return cls(H, H, [H.basis(i) for i in range(H.dim)])

    @classmethod
    def from_matrix(cls, source: HopfAlgebra, target: HopfAlgebra, matrix: Matrix) -> "LinearMap":
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match {target.dim}x{source.dim}")
        cols = [{i: matrix.rows[i][j] for i in range(target.dim) if matrix.rows[i][j]} for j in range(source.dim)]
        return cls(source, target, cols)

    @property
    def matrix(self) -> Matrix:
        return Matrix.from_sparse_columns(self.source.field, self.columns, self.target.dim)

    def apply(self, u: dict) -> dict:
        acc: dict = {}
        for j, c in u.items():
            V.axpy(acc, c, self.columns[j])
        return acc

    def apply_tensor(self, t: dict, other: "LinearMap | None" = None) -> dict:
        """(self (x) other)(t), other defaulting to self."""
        g = other or self
        acc: dict = {}
        for (j, k), c in t.items():
            for a, x in self.columns[j].items():
                for b, y in g.columns[k].items():
                    key = (a, b)
                    val = c * x * y
                    if key in acc:
                        val = acc[key] + val
                        if val:
                            acc[key] = val
                        else:
                            del acc[key]
                    elif val:
                        acc[key] = val
        return acc

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self o inner."""
        return LinearMap(inner.source, self.target, [self.apply(c) for c in inner.columns])

    def __matmul__(self, inner: "LinearMap") -> "LinearMap":
        return self.compose(inner)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.columns == other.columns and self.source.dim == other.source.dim and self.target.dim == other.target.dim

    def __hash__(self):
        return hash(tuple(tuple(sorted(c.items())) for c in self.columns))

    def is_identity(self) -> bool:
        return self.source.dim == self.target.dim and all(c == {i: 1} for i, c in enumerate(self.columns))

    def __repr__(self) -> str:
        return f"<LinearMap {self.source.dim} -> {self.target.dim}>"


def is_hopf_morphism(f: LinearMap) -> AxiomReport:
    """f(ab) = f(a)f(b), f(1) = 1, (f (x) f)Delta = Delta f, epsilon f = epsilon."""
    A, B = f.source, f.target
    report = AxiomReport()
    mult = _Sweep("multiplicative")
    images = f.columns
    for i in range(A.dim):
        for j in range(A.dim):
            mult.compare((i, j), f.apply(A.mult[i][j]), B.multiply(images[i], images[j]))
    report.add(mult.check)
    unital = _Sweep("unital")
    unital.compare((), f.apply(A.one()), B.one())
    report.add(unital.check)
    comult = _Sweep("comultiplicative")
    for i in range(A.dim):
        comult.compare((i,), f.apply_tensor(A.comult[i]), B.comultiply(images[i]))
    report.add(comult.check)
    counit = _Sweep("counital")
    for i in range(A.dim):
        counit.compare_scalar((i,), B.apply_counit(images[i]), A.counit[i])
    report.add(counit.check)
    return report


def is_coalgebra_map(f: LinearMap, unitary: bool = False) -> AxiomReport:
    A, B = f.source, f.target
    report = AxiomReport()
    comult = _Sweep("comultiplicative")
    counit = _Sweep("counital")
    for i in range(A.dim):
        comult.compare((i,), f.apply_tensor(A.comult[i]), B.comultiply(f.columns[i]))
        counit.compare_scalar((i,), B.apply_counit(f.columns[i]), A.counit[i])
    report.add(comult.check)
    report.add(counit.check)
    if unitary:
        unital = _Sweep("unital")
        unital.compare((), f.apply(A.one()), B.one())
        report.add(unital.check)
    return report


def matrix_rank(f: LinearMap) -> int:
    return len(rref_sparse(f.source.field, f.columns, f.target.dim)[1])


def is_bijective(f: LinearMap) -> bool:
    """Square and of full rank (exact elimination)."""
    if f.source.dim != f.target.dim:
        return False
    return matrix_rank(f) == f.source.dim
