"""A finite, fully computable kernel 2-category.

Objects are finite sets (discrete schemes), 1-morphisms are kernels
(matrices of finite-dimensional vector spaces modeling integral transforms),
2-morphisms are entrywise linear maps.  Every vector space is represented by
its dimension; 2-cells carry explicit matrices with respect to standard
bases.  All canonical isomorphisms (associativity, units, the symmetry
twist, interchange of tensor and composition) are realized as explicit
permutation matrices, so equivalences become matrix equalities.

Basis conventions, fixed once:

* a point of the product object ``X (x) Y`` is the pair ``(x, y)`` with
  index ``x * |Y| + y``;
* the entry of a composite ``L o K`` at ``(u, s)`` is the direct sum over
  middle points ``t`` of ``L[u,t] (x) K[t,s]``, with basis triples
  ``(t, i, j)`` in lexicographic order (``i`` indexes ``L``, ``j`` indexes
  ``K``);
* the entry of a tensor kernel at ``((t,t'), (s,s'))`` is
  ``A[t,s] (x) B[t',s']`` with the first factor basis-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graded import GradedSpace
from .linalg import Matrix, ShapeError
from .scalars import RF_ONE, RF_ZERO, RationalFunction


class CompositionError(ValueError):
    """Raised when 1- or 2-morphism boundaries do not match."""


@dataclass(frozen=True)
class FinObj:
    """A finite set with elements 0..size-1; the monoidal unit has size 1."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("negative object size")


UNIT = FinObj(1)


def tensor_objects(x: FinObj, y: FinObj) -> FinObj:
    return FinObj(x.size * y.size)


class Kernel:
    """A 1-morphism: a target.size x source.size matrix of dimensions."""

    __slots__ = ("source", "target", "dims")

    def __init__(self, source: FinObj, target: FinObj, dims: Sequence[Sequence[int]]):
        dims = [[int(d) for d in row] for row in dims]
        if len(dims) != target.size or any(len(r) != source.size for r in dims):
            raise ShapeError(
                f"kernel dims must be {target.size}x{source.size}")
        if any(d < 0 for row in dims for d in row):
            raise ValueError("negative dimension in kernel")
        self.source = source
        self.target = target
        self.dims = dims

    def dim(self, t: int, s: int) -> int:
        return self.dims[t][s]

    def same_shape(self, other: "Kernel") -> bool:
        return (self.source == other.source and self.target == other.target
                and self.dims == other.dims)

    def is_endo(self) -> bool:
        return self.source == self.target

    def diagonal_dim(self) -> int:
        if not self.is_endo():
            raise ShapeError("diagonal of a non-endo kernel")
        return sum(self.dims[s][s] for s in range(self.source.size))

    def __repr__(self):
        return f"Kernel({self.target.size}x{self.source.size}: {self.dims})"


class TwoCell:
    """A 2-morphism between parallel kernels: one matrix per entry."""

    __slots__ = ("src", "tgt", "maps")

    def __init__(self, src: Kernel, tgt: Kernel, maps: Sequence[Sequence[Matrix]]):
        if src.source != tgt.source or src.target != tgt.target:
            raise CompositionError("2-cell between non-parallel kernels")
        if len(maps) != src.target.size or any(len(r) != src.source.size for r in maps):
            raise ShapeError("2-cell entry grid has wrong shape")
        for t in range(src.target.size):
            for s in range(src.source.size):
                m = maps[t][s]
                if (m.rows, m.cols) != (tgt.dim(t, s), src.dim(t, s)):
                    raise ShapeError(
                        f"2-cell entry ({t},{s}) is {m.rows}x{m.cols}, expected "
                        f"{tgt.dim(t, s)}x{src.dim(t, s)}")
        self.src = src
        self.tgt = tgt
        self.maps = [list(r) for r in maps]

    def map(self, t: int, s: int) -> Matrix:
        return self.maps[t][s]

    def equals(self, other: "TwoCell") -> bool:
        if not (self.src.same_shape(other.src) and self.tgt.same_shape(other.tgt)):
            return False
        return all(self.maps[t][s].equals(other.maps[t][s])
                   for t in range(self.src.target.size)
                   for s in range(self.src.source.size))


# ---------------------------------------------------------------------------
# elementary kernels


def identity_kernel(x: FinObj) -> Kernel:
    return Kernel(x, x, [[1 if t == s else 0 for s in range(x.size)]
                         for t in range(x.size)])


def pushforward_kernel(f: Sequence[int], x: FinObj | None = None) -> Kernel:
    """The kernel of the pushforward along a map of finite sets: entry
    (t, s) is one-dimensional iff t = f(s)."""
    f = list(f)
    if x is None:
        x = FinObj(len(f))
    if len(f) != x.size or any(not (0 <= v < x.size) for v in f):
        raise ValueError(f"{f} is not a map of a {x.size}-element set to itself")
    return Kernel(x, x, [[1 if t == f[s] else 0 for s in range(x.size)]
                         for t in range(x.size)])


def dual_kernel(k: Kernel) -> Kernel:
    """Entrywise dual: source/target swapped, dimension matrix transposed."""
    return Kernel(k.target, k.source,
                  [[k.dim(t, s) for t in range(k.target.size)]
                   for s in range(k.source.size)])


def coev_kernel(x: FinObj) -> Kernel:
    """I -> X (x) X^v, supported on the diagonal with one-dimensional fibers."""
    xx = tensor_objects(x, x)
    return Kernel(UNIT, xx, [[1 if p // x.size == p % x.size else 0]
                             for p in range(xx.size)])


def ev_kernel(x: FinObj) -> Kernel:
    """X^v (x) X -> I, the diagonal pairing."""
    xx = tensor_objects(x, x)
    return Kernel(xx, UNIT, [[1 if p // x.size == p % x.size else 0
                              for p in range(xx.size)]])


def twist_kernel(x: FinObj, y: FinObj) -> Kernel:
    """The symmetry X (x) Y -> Y (x) X, a permutation of points."""
    xy = tensor_objects(x, y)
    yx = tensor_objects(y, x)
    dims = [[0] * xy.size for _ in range(yx.size)]
    for a in range(x.size):
        for b in range(y.size):
            dims[b * x.size + a][a * y.size + b] = 1
    return Kernel(xy, yx, dims)


def compose_kernels(l: Kernel, k: Kernel) -> Kernel:
    """Composite l o k: entry dims are the integer matrix product."""
    if k.target != l.source:
        raise CompositionError(
            f"cannot compose: middle objects {k.target} vs {l.source}")
    mid = l.source.size
    dims = [[sum(l.dim(u, t) * k.dim(t, s) for t in range(mid))
             for s in range(k.source.size)]
            for u in range(l.target.size)]
    return Kernel(k.source, l.target, dims)


def tensor_kernels(a: Kernel, b: Kernel) -> Kernel:
    src = tensor_objects(a.source, b.source)
    tgt = tensor_objects(a.target, b.target)
    dims = [[a.dim(p // b.target.size, q // b.source.size)
             * b.dim(p % b.target.size, q % b.source.size)
             for q in range(src.size)]
            for p in range(tgt.size)]
    return Kernel(src, tgt, dims)


# ---------------------------------------------------------------------------
# 2-cell calculus


def id_cell(k: Kernel) -> TwoCell:
    return TwoCell(k, k, [[Matrix.identity(k.dim(t, s))
                           for s in range(k.source.size)]
                          for t in range(k.target.size)])


def iso_identity(src: Kernel, tgt: Kernel) -> TwoCell:
    """Identity-matrix cell between two structurally equal kernels (unitors
    collapse to this under the basis conventions)."""
    if not src.same_shape(tgt):
        raise CompositionError("iso_identity between non-equal kernels")
    return TwoCell(src, tgt, [[Matrix.identity(src.dim(t, s))
                               for s in range(src.source.size)]
                              for t in range(src.target.size)])


def vcompose(c2: TwoCell, c1: TwoCell) -> TwoCell:
    """Vertical composition c2 after c1."""
    if not c1.tgt.same_shape(c2.src):
        raise CompositionError("vertical composition boundary mismatch")
    maps = [[c2.map(t, s) @ c1.map(t, s)
             for s in range(c1.src.source.size)]
            for t in range(c1.src.target.size)]
    return TwoCell(c1.src, c2.tgt, maps)


def vcompose_chain(*cells: TwoCell) -> TwoCell:
    """Vertical composition of cells listed first-to-last."""
    out = cells[0]
    for c in cells[1:]:
        out = vcompose(c, out)
    return out


def hcompose(cl: TwoCell, ck: TwoCell) -> TwoCell:
    """Horizontal composition along kernel composition: a cell from
    compose(L, K) to compose(L', K'), blockwise Kronecker over middles."""
    if ck.src.target != cl.src.source:
        raise CompositionError("horizontal composition boundary mismatch")
    src = compose_kernels(cl.src, ck.src)
    tgt = compose_kernels(cl.tgt, ck.tgt)
    mid = cl.src.source.size
    maps = []
    for u in range(src.target.size):
        row = []
        for s in range(src.source.size):
            block = Matrix(0, 0, [])
            for t in range(mid):
                block = block.direct_sum(cl.map(u, t).kron(ck.map(t, s)))
            row.append(block)
        maps.append(row)
    return TwoCell(src, tgt, maps)


def tensor_cells(a: TwoCell, b: TwoCell) -> TwoCell:
    src = tensor_kernels(a.src, b.src)
    tgt = tensor_kernels(a.tgt, b.tgt)
    nbt, nbs = b.src.target.size, b.src.source.size
    maps = [[a.map(p // nbt, q // nbs).kron(b.map(p % nbt, q % nbs))
             for q in range(src.source.size)]
            for p in range(src.target.size)]
    return TwoCell(src, tgt, maps)


def transpose_iso(cell: TwoCell) -> TwoCell:
    """Inverse of a permutation-matrix cell."""
    return TwoCell(cell.tgt, cell.src,
                   [[cell.map(t, s).transpose()
                     for s in range(cell.src.source.size)]
                    for t in range(cell.src.target.size)])


def _permutation_cell(src: Kernel, tgt: Kernel,
                      positions: Callable[[int, int], list[tuple[int, int]]]) -> TwoCell:
    """Build a cell whose entry at (t, s) is the 0/1 matrix with ones at the
    (row, col) pairs produced by ``positions(t, s)``."""
    maps = []
    for t in range(src.target.size):
        row = []
        for s in range(src.source.size):
            m = Matrix.zero(tgt.dim(t, s), src.dim(t, s))
            for r, c in positions(t, s):
                m[r, c] = RF_ONE
            row.append(m)
        maps.append(row)
    return TwoCell(src, tgt, maps)


def assoc(m: Kernel, l: Kernel, k: Kernel) -> TwoCell:
    """Associator (m o l) o k -> m o (l o k), a permutation of basis triples."""
    ml = compose_kernels(m, l)
    lk = compose_kernels(l, k)
    src = compose_kernels(ml, k)
    tgt = compose_kernels(m, lk)

    def positions(v: int, s: int):
        out = []
        col = 0
        # precompute target offsets
        base_u = []
        off = 0
        for u in range(m.source.size):
            base_u.append(off)
            off += m.dim(v, u) * lk.dim(u, s)
        for t in range(l.source.size):
            for u in range(m.source.size):
                off_t = sum(l.dim(u, t2) * k.dim(t2, s) for t2 in range(t))
                for mi in range(m.dim(v, u)):
                    for li in range(l.dim(u, t)):
                        for j in range(k.dim(t, s)):
                            rowpos = (base_u[u] + mi * lk.dim(u, s)
                                      + off_t + li * k.dim(t, s) + j)
                            out.append((rowpos, col))
                            col += 1
        return out

    return _permutation_cell(src, tgt, positions)


def interchange(a: Kernel, b: Kernel, c: Kernel, d: Kernel) -> TwoCell:
    """(a (x) b) o (c (x) d) -> (a o c) (x) (b o d), a basis permutation."""
    src = compose_kernels(tensor_kernels(a, b), tensor_kernels(c, d))
    ac = compose_kernels(a, c)
    bd = compose_kernels(b, d)
    tgt = tensor_kernels(ac, bd)

    nx, nxp = a.source.size, b.source.size  # middle object sizes

    def positions(p: int, q: int):
        y, yp = p // b.target.size, p % b.target.size
        w, wp = q // d.source.size, q % d.source.size
        out = []
        col = 0
        dim_bd = bd.dim(yp, wp)
        for x in range(nx):
            off_ac = sum(a.dim(y, x2) * c.dim(x2, w) for x2 in range(x))
            for xp in range(nxp):
                off_bd = sum(b.dim(yp, x2) * d.dim(x2, wp) for x2 in range(xp))
                for i in range(a.dim(y, x)):
                    for ip in range(b.dim(yp, xp)):
                        for j in range(c.dim(x, w)):
                            for jp in range(d.dim(xp, wp)):
                                rp = off_ac + i * c.dim(x, w) + j
                                rq = off_bd + ip * d.dim(xp, wp) + jp
                                out.append((rp * dim_bd + rq, col))
                                col += 1
        return out

    return _permutation_cell(src, tgt, positions)


# ---------------------------------------------------------------------------
# duality: unit, counit, triangles


def unit_cell(k: Kernel) -> TwoCell:
    """Id_X -> k^v o k, the coevaluation of the entrywise adjunction."""
    psi = dual_kernel(k)
    src = identity_kernel(k.source)
    tgt = compose_kernels(psi, k)

    def positions(xp: int, x: int):
        if xp != x:
            return []
        out = []
        row = 0
        for y in range(k.target.size):
            d = k.dim(y, x)
            for i in range(d):
                for j in range(d):
                    if i == j:
                        out.append((row, 0))
                    row += 1
        return out

    return _permutation_cell(src, tgt, positions)


def counit_cell(k: Kernel) -> TwoCell:
    """k o k^v -> Id_Y, the evaluation of the entrywise adjunction."""
    psi = dual_kernel(k)
    src = compose_kernels(k, psi)
    tgt = identity_kernel(k.target)

    def positions(yp: int, y: int):
        if yp != y:
            return []
        out = []
        col = 0
        for x in range(k.source.size):
            d = k.dim(y, x)
            for i in range(d):
                for j in range(d):
                    if i == j:
                        out.append((0, col))
                    col += 1
        return out

    return _permutation_cell(src, tgt, positions)


def check_triangle_identities(k: Kernel) -> bool:
    """Both triangle identities for the unit/counit of k -| k^v."""
    psi = dual_kernel(k)
    u, c = unit_cell(k), counit_cell(k)
    # k ~ k o Id -> k o (psi o k) ~ (k o psi) o k -> Id o k ~ k
    t1 = vcompose_chain(
        iso_identity(k, compose_kernels(k, identity_kernel(k.source))),
        hcompose(id_cell(k), u),
        transpose_iso(assoc(k, psi, k)),
        hcompose(c, id_cell(k)),
        iso_identity(compose_kernels(identity_kernel(k.target), k), k),
    )
    # psi ~ Id o psi -> (psi o k) o psi ~ psi o (k o psi) -> psi o Id ~ psi
    t2 = vcompose_chain(
        iso_identity(psi, compose_kernels(identity_kernel(k.source), psi)),
        hcompose(u, id_cell(psi)),
        assoc(psi, k, psi),
        hcompose(id_cell(psi), c),
        iso_identity(compose_kernels(psi, identity_kernel(k.target)), psi),
    )
    return t1.equals(id_cell(k)) and t2.equals(id_cell(psi))


# ---------------------------------------------------------------------------
# traces


def trace_of_kernel(k: Kernel) -> GradedSpace:
    """Trace of an endo-kernel: the honest composite
    ev o twist o (k (x) id) o coev over the unit object, cross-checked
    against the diagonal direct sum and returned in degree 0."""
    if not k.is_endo():
        raise ShapeError("trace of a non-endo kernel")
    x = k.source
    composite = compose_kernels(
        ev_kernel(x),
        compose_kernels(
            twist_kernel(x, x),
            compose_kernels(tensor_kernels(k, identity_kernel(x)), coev_kernel(x))))
    dim = composite.dim(0, 0)
    diag = k.diagonal_dim()
    if dim != diag:
        raise AssertionError(
            f"categorical trace dim {dim} != diagonal sum {diag}")
    return GradedSpace({0: dim} if dim else {})


@dataclass
class LaxSquare:
    """A 2-commutative square: phi o F_X  ==T==>  F_Y o phi."""

    phi: Kernel
    f_x: Kernel
    f_y: Kernel
    t: TwoCell

    def __post_init__(self):
        if not (self.f_x.is_endo() and self.f_y.is_endo()):
            raise CompositionError("horizontal arrows of a lax square must be endo")
        if self.f_x.source != self.phi.source or self.f_y.source != self.phi.target:
            raise CompositionError("lax square boundary objects disagree")
        if not self.t.src.same_shape(compose_kernels(self.phi, self.f_x)):
            raise ShapeError("T source must be phi o F_X with standard bases")
        if not self.t.tgt.same_shape(compose_kernels(self.f_y, self.phi)):
            raise ShapeError("T target must be F_Y o phi with standard bases")


def _counit_square(phi: Kernel, psi_v: Kernel, v: Kernel) -> TwoCell:
    """(phi (x) psi^v) o coev_X -> coev_Y, induced by the counit."""
    x, y = phi.source, phi.target
    src = compose_kernels(v, coev_kernel(x))
    tgt = coev_kernel(y)

    def positions(p: int, _s: int):
        yy, yyp = p // y.size, p % y.size
        out = []
        col = 0
        for xx in range(x.size):
            for i in range(phi.dim(yy, xx)):
                for j in range(psi_v.dim(yyp, xx)):
                    if yy == yyp and i == j:
                        out.append((0, col))
                    col += 1
        return out

    return _permutation_cell(src, tgt, positions)


def _unit_square(phi: Kernel, psi_v: Kernel, v: Kernel,
                 ev_tw_x: Kernel, ev_tw_y: Kernel) -> TwoCell:
    """ev_X -> ev_Y o (phi (x) psi^v), induced by the unit."""
    x, y = phi.source, phi.target
    src = ev_tw_x
    tgt = compose_kernels(ev_tw_y, v)

    def positions(_t: int, q: int):
        xx, xxp = q // x.size, q % x.size
        if xx != xxp:
            return []
        out = []
        row = 0
        for yy in range(y.size):
            for i in range(phi.dim(yy, xx)):
                for j in range(psi_v.dim(yy, xxp)):
                    if i == j:
                        out.append((row, 0))
                    row += 1
        return out

    return _permutation_cell(src, tgt, positions)


def trace_of_lax_square(sq: LaxSquare) -> Matrix:
    """The morphism of traces Tr(F_X) -> Tr(F_Y): the big-rectangle pasting
    of the counit square, T (x) psi^v, and the unit square, evaluated as one
    matrix between the canonical diagonal bases."""
    phi, f_x, f_y, t = sq.phi, sq.f_x, sq.f_y, sq.t
    x, y = phi.source, phi.target
    psi_v = Kernel(x, y, phi.dims)  # (phi^v)^v: same dims as phi
    v = tensor_kernels(phi, psi_v)
    id_xd, id_yd = identity_kernel(x), identity_kernel(y)
    fxt = tensor_kernels(f_x, id_xd)
    fyt = tensor_kernels(f_y, id_yd)
    coev_x, coev_y = coev_kernel(x), coev_kernel(y)
    ev_tw_x = compose_kernels(ev_kernel(x), twist_kernel(x, x))
    ev_tw_y = compose_kernels(ev_kernel(y), twist_kernel(y, y))

    # middle square: V o (F_X (x) Id) -> (F_Y (x) Id) o V
    phi_fx = compose_kernels(phi, f_x)
    fy_phi = compose_kernels(f_y, phi)
    c2 = vcompose_chain(
        interchange(phi, psi_v, f_x, id_xd),
        tensor_cells(id_cell(phi_fx),
                     iso_identity(compose_kernels(psi_v, id_xd), psi_v)),
        tensor_cells(t, id_cell(psi_v)),
        tensor_cells(id_cell(fy_phi),
                     iso_identity(psi_v, compose_kernels(id_yd, psi_v))),
        transpose_iso(interchange(f_y, id_yd, phi, psi_v)),
    )
    c1 = _counit_square(phi, psi_v, v)
    c3 = _unit_square(phi, psi_v, v, ev_tw_x, ev_tw_y)

    topcol = compose_kernels(fxt, coev_x)
    botcol = compose_kernels(fyt, coev_y)

    full = vcompose_chain(
        hcompose(c3, id_cell(topcol)),
        assoc(ev_tw_y, v, topcol),
        hcompose(id_cell(ev_tw_y), vcompose_chain(
            transpose_iso(assoc(v, fxt, coev_x)),
            hcompose(c2, id_cell(coev_x)),
            assoc(fyt, v, coev_x),
            hcompose(id_cell(fyt), c1),
        )),
    )
    mat = full.map(0, 0)
    if (mat.rows, mat.cols) != (f_y.diagonal_dim(), f_x.diagonal_dim()):
        raise AssertionError("trace map has unexpected shape")
    return mat


def compose_lax_squares(sq1: LaxSquare, sq2: LaxSquare) -> LaxSquare:
    """Vertical pasting: sq1 on top (X -> Y), sq2 below (Y -> Z)."""
    if not sq1.f_y.same_shape(sq2.f_x):
        raise CompositionError("pasting requires sq1 bottom row == sq2 top row")
    phi1, phi2 = sq1.phi, sq2.phi
    phi = compose_kernels(phi2, phi1)
    t = vcompose_chain(
        assoc(phi2, phi1, sq1.f_x),
        hcompose(id_cell(phi2), sq1.t),
        transpose_iso(assoc(phi2, sq1.f_y, phi1)),
        hcompose(sq2.t, id_cell(phi1)),
        assoc(sq2.f_y, phi2, phi1),
    )
    return LaxSquare(phi, sq1.f_x, sq2.f_y, t)


# ---------------------------------------------------------------------------
# Chern character, integration, Lefschetz numbers (discrete model)


def _fixed_points(f: Sequence[int]) -> list[int]:
    return [s for s, v in enumerate(f) if v == s]


def equivariant_square(fiber_dims: Sequence[int], twists: Sequence[Matrix],
                       f: Sequence[int]) -> LaxSquare:
    """The lax square of a sheaf on a finite set, lax-equivariant along f.

    ``fiber_dims[s]`` is the dimension of the fiber at s; ``twists[s]`` maps
    the fiber at f(s) to the fiber at s (the local datum of f*E -> E)."""
    n = len(fiber_dims)
    if len(f) != n or len(twists) != n:
        raise ValueError("fiber_dims, twists and f must have equal length")
    s_obj = FinObj(n)
    f_y = pushforward_kernel(f, s_obj)
    for s in range(n):
        m = twists[s]
        if (m.rows, m.cols) != (fiber_dims[s], fiber_dims[f[s]]):
            raise ShapeError(
                f"twist at {s} is {m.rows}x{m.cols}, expected "
                f"{fiber_dims[s]}x{fiber_dims[f[s]]}")
    phi = Kernel(UNIT, s_obj, [[d] for d in fiber_dims])
    f_x = identity_kernel(UNIT)
    src = compose_kernels(phi, f_x)
    tgt = compose_kernels(f_y, phi)
    maps = []
    for s in range(n):
        rows: list[list[RationalFunction]] = []
        for u in range(n):
            if f[u] != s:
                continue
            rows.extend(twists[u].row(i) for i in range(twists[u].rows))
        m = Matrix.from_rows(rows) if rows else Matrix.zero(0, fiber_dims[s])
        if m.cols != fiber_dims[s]:
            m = Matrix.zero(m.rows, fiber_dims[s])
        maps.append([m])
    return LaxSquare(phi, f_x, f_y, TwoCell(src, tgt, maps))


def chern_character(fiber_dims: Sequence[int], twists: Sequence[Matrix],
                    f: Sequence[int]) -> list[RationalFunction]:
    """Chern character as the trace of the equivariant lax square, one scalar
    per fixed point of f (components in the canonical basis e_x)."""
    sq = equivariant_square(fiber_dims, twists, f)
    mat = trace_of_lax_square(sq)
    return [mat[i, 0] for i in range(mat.rows)]


def chern_direct(fiber_dims: Sequence[int], twists: Sequence[Matrix],
                 f: Sequence[int]) -> list[RationalFunction]:
    """Direct formula: the trace of the twist restricted to each fixed point.
    No categorical composite; the oracle for chern_character."""
    out = []
    for s in _fixed_points(f):
        if twists[s].rows != twists[s].cols:
            raise ShapeError("twist at a fixed point must be square")
        out.append(twists[s].trace())
    return out


def integrate(f: Sequence[int]) -> Matrix:
    """Integration against fixed points: the trace of the global-sections
    square (all fibers one-dimensional, identity 2-cell).  A row vector over
    the fixed points of f; in the discrete model every entry is 1."""
    n = len(f)
    s_obj = FinObj(n)
    f_x = pushforward_kernel(f, s_obj)
    f_y = identity_kernel(UNIT)
    gamma = Kernel(s_obj, UNIT, [[1] * n])
    src = compose_kernels(gamma, f_x)
    tgt = compose_kernels(f_y, gamma)
    maps = [[Matrix.identity(1) for _ in range(n)]]
    sq = LaxSquare(gamma, f_x, f_y, TwoCell(src, tgt, maps))
    return trace_of_lax_square(sq)


def lefschetz_discrete(fiber_dims: Sequence[int], twists: Sequence[Matrix],
                       f: Sequence[int]) -> RationalFunction:
    """Lefschetz number: trace of the single assembled map on the direct sum
    of all fibers, each twist block placed from the f(s) block to the s
    block."""
    n = len(fiber_dims)
    total = sum(fiber_dims)
    offsets = [sum(fiber_dims[:s]) for s in range(n)]
    big = Matrix.zero(total, total)
    for s in range(n):
        m = twists[s]
        if (m.rows, m.cols) != (fiber_dims[s], fiber_dims[f[s]]):
            raise ShapeError("twist shapes inconsistent with fibers")
        for i in range(m.rows):
            for j in range(m.cols):
                big[offsets[s] + i, offsets[f[s]] + j] = m[i, j]
    return big.trace()
