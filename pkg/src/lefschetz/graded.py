"""Finite-support Z-graded vector spaces and their Euler-characteristic trace.

A graded endomorphism is stored as one matrix block per degree; the trace is
the alternating sum over degrees of the blockwise matrix traces.  Complexes
are never stored, only (cohomology) spaces.
"""

from __future__ import annotations

from typing import Mapping

from .linalg import Matrix, ShapeError
from .scalars import RF_ZERO, RationalFunction


class GradedSpace:
    """Map from integer degree to positive dimension, finitely supported."""

    __slots__ = ("dims",)

    def __init__(self, dims: Mapping[int, int] | None = None):
        clean = {}
        for d, n in (dims or {}).items():
            if n < 0:
                raise ValueError(f"negative dimension {n} in degree {d}")
            if n:
                clean[int(d)] = int(n)
        self.dims = clean

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in self.dims.items())

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self.dims == other.dims

    def __repr__(self):
        return f"GradedSpace({self.dims})"


class GradedMap:
    """Degree-preserving map of graded spaces, one matrix block per degree.

    Missing blocks are treated as zero, so maps built from partial cohomology
    data compose without fuss.
    """

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: GradedSpace, target: GradedSpace,
                 blocks: Mapping[int, Matrix] | None = None):
        self.source = source
        self.target = target
        self.blocks = {}
        for d, m in (blocks or {}).items():
            if (m.rows, m.cols) != (target.dim(d), source.dim(d)):
                raise ShapeError(
                    f"block at degree {d} is {m.rows}x{m.cols}, expected "
                    f"{target.dim(d)}x{source.dim(d)}")
            self.blocks[int(d)] = m

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedMap":
        return cls(space, space, {d: Matrix.identity(n) for d, n in space.dims.items()})

    @classmethod
    def diagonal(cls, degree: int, eigenvalues) -> "GradedMap":
        """Endomorphism of a single-degree space acting diagonally."""
        sp = GradedSpace({degree: len(eigenvalues)})
        if not eigenvalues:
            return cls(sp, sp, {})
        return cls(sp, sp, {degree: Matrix.diagonal(list(eigenvalues))})

    def block(self, degree: int) -> Matrix:
        b = self.blocks.get(degree)
        if b is None:
            return Matrix.zero(self.target.dim(degree), self.source.dim(degree))
        return b

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        if other.target != self.source:
            raise ShapeError("graded composition boundary mismatch")
        degrees = set(self.blocks) | set(other.blocks)
        blocks = {}
        for d in degrees:
            m = self.block(d) @ other.block(d)
            if m.rows and m.cols:
                blocks[d] = m
        return GradedMap(other.source, self.target, blocks)

    def direct_sum(self, other: "GradedMap") -> "GradedMap":
        src = GradedSpace({d: self.source.dim(d) + other.source.dim(d)
                           for d in set(self.source.dims) | set(other.source.dims)})
        tgt = GradedSpace({d: self.target.dim(d) + other.target.dim(d)
                           for d in set(self.target.dims) | set(other.target.dims)})
        blocks = {}
        for d in set(self.blocks) | set(other.blocks):
            blocks[d] = self.block(d).direct_sum(other.block(d))
        return GradedMap(src, tgt, blocks)

    def tensor(self, other: "GradedMap") -> "GradedMap":
        """Tensor product; degrees add, blocks are Kronecker products."""
        src_dims: dict[int, int] = {}
        for d1, n1 in self.source.dims.items():
            for d2, n2 in other.source.dims.items():
                src_dims[d1 + d2] = src_dims.get(d1 + d2, 0) + n1 * n2
        tgt_dims: dict[int, int] = {}
        for d1, n1 in self.target.dims.items():
            for d2, n2 in other.target.dims.items():
                tgt_dims[d1 + d2] = tgt_dims.get(d1 + d2, 0) + n1 * n2
        if src_dims != tgt_dims or self.source.dims != self.target.dims \
                or other.source.dims != other.target.dims:
            raise ShapeError("tensor of graded maps implemented for endomorphisms only")
        blocks: dict[int, Matrix] = {}
        for d in src_dims:
            pieces = [self.block(d1).kron(other.block(d - d1))
                      for d1 in sorted(self.source.dims)
                      if other.source.dim(d - d1)]
            if pieces:
                m = pieces[0]
                for p in pieces[1:]:
                    m = m.direct_sum(p)
                blocks[d] = m
        return GradedMap(GradedSpace(src_dims), GradedSpace(tgt_dims), blocks)


def euler_trace(f: GradedMap) -> RationalFunction:
    """Alternating sum over degrees of blockwise traces (the trace of a
    dualizable graded vector space endomorphism)."""
    if f.source != f.target:
        raise ShapeError("euler_trace requires an endomorphism")
    total = RF_ZERO
    for d in sorted(f.source.dims):
        t = f.block(d).trace()
        total = total + (t if d % 2 == 0 else -t)
    return total
