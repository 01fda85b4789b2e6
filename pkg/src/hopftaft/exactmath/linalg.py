"""Exact dense matrices and Gauss-Jordan elimination over a Field.

Elimination runs on sparse rows internally; the structure-constant systems
solved here are overwhelmingly zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field, FieldElement

SparseRow = dict  # column -> nonzero FieldElement


class Matrix:
    """Immutable rectangular matrix with explicit shape."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_sparse_columns(cls, field: Field, columns: Sequence[dict], nrows: int) -> "Matrix":
        rows = [[field.zero] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, c in col.items():
                rows[i][j] = c
        return cls(field, rows, len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.field, out, other.ncols)

    def apply(self, vec: Sequence) -> list[FieldElement]:
        return [self.field.sum(a * v for a, v in zip(row, vec) if a and v) for row in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def sparse_rows(self) -> list[SparseRow]:
        return [{j: x for j, x in enumerate(r) if x} for r in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    rank: int
    pivots: tuple[int, ...]
    kernel: tuple[tuple[FieldElement, ...], ...]


def rref_sparse(field: Field, rows: Iterable[SparseRow], ncols: int) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form of sparse rows; returns (pivot rows, pivot columns).

    Pivot rows come back sorted by pivot column and normalized to a leading 1.
    """
    pending = [dict(r) for r in rows if r]
    done: list[SparseRow] = []
    pivots: list[int] = []
    for col in range(ncols):
        pick = None
        for idx, r in enumerate(pending):
            if col in r:
                pick = idx
                break
        if pick is None:
            continue
        prow = pending.pop(pick)
        inv = prow[col].inverse()
        prow = {j: x * inv for j, x in prow.items()}
        for bucket in (pending, done):
            for r in bucket:
                c = r.get(col)
                if c is None:
                    continue
                for j, x in prow.items():
                    y = r.get(j, field.zero) - c * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
        pending = [r for r in pending if r]
        done.append(prow)
        pivots.append(col)
    return done, pivots


def kernel_from_rref(field: Field, prows: Sequence[SparseRow], pivots: Sequence[int], ncols: int) -> list[dict]:
    """Sparse kernel basis, one vector per free column."""
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: field.one}
        for prow, pc in zip(prows, pivots):
            c = prow.get(free)
            if c:
                vec[pc] = -c
        basis.append(vec)
    return basis


def rref_and_kernel(matrix: Matrix) -> RrefResult:
    """Exact RREF, rank and kernel basis; each kernel vector is checked to map to zero."""
    field = matrix.field
    prows, pivots = rref_sparse(field, matrix.sparse_rows(), matrix.ncols)
    dense = [[r.get(j, field.zero) for j in range(matrix.ncols)] for r in prows]
    dense += [[field.zero] * matrix.ncols for _ in range(matrix.nrows - len(prows))]
    kernel = []
    for vec in kernel_from_rref(field, prows, pivots, matrix.ncols):
        full = tuple(vec.get(j, field.zero) for j in range(matrix.ncols))
        assert not any(matrix.apply(full)), "kernel vector not annihilated"
        kernel.append(full)
    return RrefResult(
        rref=Matrix(field, dense, matrix.ncols),
        rank=len(pivots),
        pivots=tuple(pivots),
        kernel=tuple(kernel),
    )


def rank(matrix: Matrix) -> int:
    return len(rref_sparse(matrix.field, matrix.sparse_rows(), matrix.ncols)[1])
