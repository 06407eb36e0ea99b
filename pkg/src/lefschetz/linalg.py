"""Exact linear algebra over the rational-function field.

Determinants use fraction-aware Gaussian elimination (first nonzero pivot in
column order; exact arithmetic makes pivoting heuristics irrelevant).
Exterior-power traces are sums of principal minors, feeding the
characteristic-polynomial identity det(1 + sA) = sum_p Tr(Lambda^p A) s^p.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .scalars import RF_ONE, RF_ZERO, RationalFunction, rf_equal


class ShapeError(ValueError):
    """Raised when matrix shapes do not line up."""


class Matrix:
    """Dense matrix of RationalFunction entries (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = [RationalFunction._coerce(e) for e in entries]
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(f"expected {rows}x{cols} = {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ShapeError("ragged rows")
        return cls(n, m, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [RF_ONE if i == j else RF_ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [RF_ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "Matrix":
        n = len(diag)
        m = cls.zero(n, n)
        for i, d in enumerate(diag):
            m[i, i] = RationalFunction._coerce(d)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i * self.cols + j] = RationalFunction._coerce(value)

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, list(self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix addition shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix subtraction shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = RationalFunction._coerce(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = Matrix.zero(self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self[i, k]
                if a.is_zero():
                    continue
                for j in range(other.cols):
                    b = other[k, j]
                    if not b.is_zero():
                        out[i, j] = out[i, j] + a * b
        return out

    __mul__ = __matmul__

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; first factor is basis-major."""
        out = Matrix.zero(self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                if a.is_zero():
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other[k, l]
                        if not b.is_zero():
                            out[i * other.rows + k, j * other.cols + l] = a * b
        return out

    def direct_sum(self, other: "Matrix") -> "Matrix":
        out = Matrix.zero(self.rows + other.rows, self.cols + other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = self[i, j]
        for i in range(other.rows):
            for j in range(other.cols):
                out[self.rows + i, self.cols + j] = other[i, j]
        return out

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix.from_rows([[self[i, j] for j in col_idx] for i in row_idx]) if row_idx else Matrix(0, 0, [])

    def trace(self) -> RationalFunction:
        if self.rows != self.cols:
            raise ShapeError("trace of a non-square matrix")
        t = RF_ZERO
        for i in range(self.rows):
            t = t + self[i, i]
        return t

    def is_square(self) -> bool:
        return self.rows == self.cols

    def equals(self, other: "Matrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(rf_equal(a, b) for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        rows = "; ".join(", ".join(str(self[i, j]) for j in range(self.cols)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {rows})"


def det(a: Matrix) -> RationalFunction:
    """Determinant by exact Gaussian elimination over the fraction field."""
    if not a.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return RF_ONE
    m = a.copy()
    sign = 1
    result = RF_ONE
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not m[r, col].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            return RF_ZERO
        if pivot_row != col:
            for j in range(n):
                m[col, j], m[pivot_row, j] = m[pivot_row, j], m[col, j]
            sign = -sign
        pivot = m[col, col]
        result = result * pivot
        for r in range(col + 1, n):
            factor = m[r, col] / pivot
            if factor.is_zero():
                continue
            for j in range(col, n):
                m[r, j] = m[r, j] - factor * m[col, j]
    return result if sign == 1 else -result


def exterior_power_trace(a: Matrix, p: int) -> RationalFunction:
    """Trace of the induced map on the p-th exterior power: the sum of all
    principal p x p minors."""
    if not a.is_square():
        raise ShapeError("exterior power of a non-square matrix")
    n = a.rows
    if p < 0:
        raise ValueError(f"negative exterior power {p}")
    if p > n:
        return RF_ZERO  # the exterior power is the zero space
    if p == 0:
        return RF_ONE
    total = RF_ZERO
    for idx in combinations(range(n), p):
        total = total + det(a.submatrix(idx, idx))
    return total


def char_poly_via_exterior(a: Matrix) -> list[RationalFunction]:
    """Coefficients [c_0, ..., c_n] of det(1 + sA) = sum_p c_p s^p, computed
    from exterior-power traces (c_p = Tr(Lambda^p A))."""
    if not a.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    return [exterior_power_trace(a, p) for p in range(a.rows + 1)]


def char_poly_via_elimination(a: Matrix, var: str = "s") -> RationalFunction:
    """det(1 + sA) computed by elimination over the field extended by ``var``.

    The independent route of the characteristic-polynomial identity: shares
    no code with the minor enumeration beyond scalar arithmetic.
    """
    if not a.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    s = RationalFunction.variable(var)
    n = a.rows
    m = Matrix.zero(n, n)
    for i in range(n):
        for j in range(n):
            m[i, j] = (RF_ONE if i == j else RF_ZERO) + s * a[i, j]
    return det(m)


def poly_in_var(coeffs: Sequence[RationalFunction], var: str = "s") -> RationalFunction:
    """Assemble sum_p coeffs[p] * var^p as a RationalFunction."""
    s = RationalFunction.variable(var)
    total = RF_ZERO
    power = RF_ONE
    for c in coeffs:
        total = total + RationalFunction._coerce(c) * power
        power = power * s
    return total
