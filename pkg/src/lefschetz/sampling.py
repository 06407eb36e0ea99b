"""Seeded random instance generators for property suites.

All generators take an explicit ``random.Random`` so that failures are
reproducible from a single integer seed; bounds are kept at desk scale
(object sizes <= 5, entry dimensions <= 3).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .kernels import (FinObj, Kernel, LaxSquare, TwoCell, compose_kernels)
from .linalg import Matrix
from .projective import BundleSpec, ProjScenario
from .scalars import RationalFunction


def random_fraction(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_nonzero_fraction(rng: random.Random, span: int = 6) -> Fraction:
    while True:
        f = random_fraction(rng, span)
        if f:
            return f


def random_scalar(rng: random.Random, span: int = 6) -> RationalFunction:
    return RationalFunction.const(random_fraction(rng, span))


def random_matrix(rng: random.Random, rows: int, cols: int,
                  span: int = 4) -> Matrix:
    return Matrix(rows, cols,
                  [RationalFunction.const(random_fraction(rng, span))
                   for _ in range(rows * cols)])


def random_dim(rng: random.Random, max_dim: int = 2) -> int:
    # biased toward small fibers to keep composite entries tractable
    return rng.choice([0, 0, 1, 1, 1] + list(range(2, max_dim + 1)))


def random_kernel(rng: random.Random, source: FinObj, target: FinObj,
                  max_dim: int = 2) -> Kernel:
    dims = [[random_dim(rng, max_dim) for _ in range(source.size)]
            for _ in range(target.size)]
    return Kernel(source, target, dims)


def random_endo_kernel(rng: random.Random, obj: FinObj, max_dim: int = 2) -> Kernel:
    return random_kernel(rng, obj, obj, max_dim)


def random_cell(rng: random.Random, src: Kernel, tgt: Kernel) -> TwoCell:
    maps = [[random_matrix(rng, tgt.dim(t, s), src.dim(t, s))
             for s in range(src.source.size)]
            for t in range(src.target.size)]
    return TwoCell(src, tgt, maps)


def random_lax_square(rng: random.Random, x: FinObj, y: FinObj,
                      max_dim: int = 2, f_x: Kernel | None = None) -> LaxSquare:
    phi = random_kernel(rng, x, y, max_dim)
    if f_x is None:
        f_x = random_endo_kernel(rng, x, max_dim)
    f_y = random_endo_kernel(rng, y, max_dim)
    t = random_cell(rng, compose_kernels(phi, f_x), compose_kernels(f_y, phi))
    return LaxSquare(phi, f_x, f_y, t)


def random_map(rng: random.Random, size: int) -> list[int]:
    return [rng.randrange(size) for _ in range(size)]


def random_equivariant_instance(rng: random.Random, max_size: int = 5,
                                max_dim: int = 3):
    """Fiber dimensions, twist matrices and a self-map of a finite set."""
    size = rng.randint(1, max_size)
    f = random_map(rng, size)
    dims = [rng.randint(0, max_dim) for _ in range(size)]
    twists = [random_matrix(rng, dims[s], dims[f[s]]) for s in range(size)]
    return dims, twists, f


def random_scenario(rng: random.Random, max_dim: int = 3,
                    max_twist: int = 8, max_summands: int = 3) -> tuple:
    """A transversal projective scenario with distinct rational eigenvalues
    and a random split bundle."""
    n = rng.randint(1, max_dim)
    eigenvalues: list[Fraction] = []
    while len(eigenvalues) < n + 1:
        e = random_nonzero_fraction(rng, 9)
        if e not in eigenvalues:
            eigenvalues.append(e)
    sc = ProjScenario(n, [RationalFunction.const(e) for e in eigenvalues])
    summands = [(rng.randint(-max_twist, max_twist),
                 RationalFunction.const(random_nonzero_fraction(rng)))
                for _ in range(rng.randint(1, max_summands))]
    return sc, BundleSpec(summands)
