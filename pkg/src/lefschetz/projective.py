"""Equivariant line bundles on projective space under diagonal automorphisms.

The fixed-point side of the Lefschetz identity is computed from local data
(fiber eigenvalues over determinants of 1 minus the tangent action); the
global side from the action on cohomology, using the monomial bases for
H^0 and H^n.  The two routes share nothing beyond scalar arithmetic, and
``verify_identity`` checks their equality exactly.

Conventions (locked by the rotation example on the projective line):

* the automorphism acts by pullback on homogeneous coordinates,
  ``x_i -> eigenvalue_i * x_i``, so a monomial ``x^a`` in ``H^0(O(m))``
  carries eigenvalue ``prod eigenvalue_i^{a_i}``;
* ``H^n(O(m))`` for ``m <= -n-1`` uses the local-cohomology monomial basis
  (all exponents <= -1) with the same eigenvalue rule;
* the fiber of ``O(m)`` at the coordinate point ``e_i`` carries eigenvalue
  ``eigenvalue_i^m`` under the canonical lift (local generator ``x_i^m``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .graded import GradedMap, GradedSpace, euler_trace
from .linalg import Matrix, ShapeError, det, exterior_power_trace
from .scalars import RF_ONE, RF_ZERO, RationalFunction, rf_equal


class NotTransversalError(ValueError):
    """Two eigenvalues coincide: fixed points are not isolated and the
    fixed-point sum is undefined."""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"eigenvalues {i} and {j} coincide; graph is not "
                         f"transversal to the diagonal")


@dataclass
class ProjScenario:
    """Projective space of dimension ``dim`` with a diagonal automorphism
    given by its eigenvalues on homogeneous coordinates."""

    dim: int
    eigenvalues: list

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        self.eigenvalues = [RationalFunction._coerce(e) for e in self.eigenvalues]
        if len(self.eigenvalues) != self.dim + 1:
            raise ValueError(f"need {self.dim + 1} eigenvalues, got {len(self.eigenvalues)}")
        for i, e in enumerate(self.eigenvalues):
            if e.is_zero():
                raise ValueError(f"eigenvalue {i} is zero")

    def check_transversal(self):
        for i, j in itertools.combinations(range(self.dim + 1), 2):
            if rf_equal(self.eigenvalues[i], self.eigenvalues[j]):
                raise NotTransversalError(i, j)


@dataclass
class BundleSpec:
    """A direct sum of twists O(m_j), each with its equivariant structure
    scaled by a nonzero constant c_j."""

    summands: list  # list of (twist, scalar) pairs

    def __post_init__(self):
        if not self.summands:
            raise ValueError("bundle must have at least one summand")
        clean = []
        for m, c in self.summands:
            c = RationalFunction._coerce(c)
            if c.is_zero():
                raise ValueError("summand scalar must be nonzero")
            clean.append((int(m), c))
        self.summands = clean

    @classmethod
    def line(cls, twist: int, scalar=1) -> "BundleSpec":
        return cls([(twist, scalar)])


@dataclass
class FixedPoint:
    """The coordinate point e_i with the tangent eigenvalues of the
    differential (the ratios lambda_j / lambda_i for j != i)."""

    index: int
    tangent_eigenvalues: list


def fixed_points(sc: ProjScenario) -> list[FixedPoint]:
    """The n+1 coordinate fixed points; raises NotTransversalError when any
    two eigenvalues coincide (non-isolated fixed locus)."""
    sc.check_transversal()
    pts = []
    for i in range(sc.dim + 1):
        li = sc.eigenvalues[i]
        tangent = [sc.eigenvalues[j] / li for j in range(sc.dim + 1) if j != i]
        pts.append(FixedPoint(i, tangent))
    return pts


def lambda_x(sc: ProjScenario, x: FixedPoint) -> RationalFunction:
    """1 / det(1 - d_x f) for the diagonal differential at a fixed point."""
    den = RF_ONE
    for mu in x.tangent_eigenvalues:
        factor = RF_ONE - mu
        if factor.is_zero():
            raise NotTransversalError(x.index, x.index)
        den = den * factor
    return RF_ONE / den


def local_term(sc: ProjScenario, b: BundleSpec, x: FixedPoint) -> RationalFunction:
    """One summand of the fixed-point side: fiber trace over det(1 - d_x f)."""
    li = sc.eigenvalues[x.index]
    numerator = RF_ZERO
    for m, c in b.summands:
        numerator = numerator + c * li**m
    return numerator * lambda_x(sc, x)


def _monomials_h0(n: int, m: int):
    """Exponent vectors a >= 0 with |a| = m, in lexicographic order."""
    if m < 0:
        return
    if n == 0:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in _monomials_h0(n - 1, m - first):
            yield (first,) + rest


def _monomials_hn(n: int, m: int):
    """Exponent vectors with all entries <= -1 and |a| = m, lex order."""
    total = -m - (n + 1)  # distribute among n+1 slots on top of -1 each
    if total < 0:
        return
    for extra in _monomials_h0(n, total):
        yield tuple(-1 - e for e in extra)


def _eigenvalue_of_monomial(sc: ProjScenario, a: Sequence[int]) -> RationalFunction:
    v = RF_ONE
    for li, e in zip(sc.eigenvalues, a):
        if e:
            v = v * li**e
    return v


def cohomology_action(sc: ProjScenario, m: int, c=1) -> GradedMap:
    """The action on the cohomology of O(m): a diagonal block in degree 0
    (monomials of degree m) for m >= 0, in degree n (local-cohomology
    monomials) for m <= -n-1, and the zero space in the acyclic range."""
    n = sc.dim
    c = RationalFunction._coerce(c)
    if m >= 0:
        eigs = [c * _eigenvalue_of_monomial(sc, a) for a in _monomials_h0(n, m)]
        return GradedMap.diagonal(0, eigs)
    if m <= -n - 1:
        eigs = [c * _eigenvalue_of_monomial(sc, a) for a in _monomials_hn(n, m)]
        return GradedMap.diagonal(n, eigs)
    empty = GradedSpace({})
    return GradedMap(empty, empty, {})


def lefschetz_lhs(sc: ProjScenario, b: BundleSpec) -> RationalFunction:
    """Global side: sum over summands of the Euler-characteristic trace of
    the cohomology action."""
    total = RF_ZERO
    for m, c in b.summands:
        total = total + euler_trace(cohomology_action(sc, m, c))
    return total


def ab_rhs(sc: ProjScenario, b: BundleSpec) -> RationalFunction:
    """Fixed-point side: sum of local terms over the coordinate points."""
    total = RF_ZERO
    for x in fixed_points(sc):
        total = total + local_term(sc, b, x)
    return total


def skyscraper_local_trace(a: Matrix) -> RationalFunction:
    """Alternating sum of exterior-power traces of the tangent action: the
    derived-stalk trace of a fixed-point skyscraper, equal to det(1 - A)."""
    if not a.is_square():
        raise ShapeError("tangent action must be square")
    total = RF_ZERO
    for p in range(a.rows + 1):
        t = exterior_power_trace(a, p)
        total = total + (t if p % 2 == 0 else -t)
    return total


def tangent_action(x: FixedPoint) -> Matrix:
    """The diagonal differential d_x f on the tangent space at e_i."""
    return Matrix.diagonal(x.tangent_eigenvalues)


@dataclass
class VerifyReport:
    """Outcome of one verification: both sides and a verdict."""

    lhs: RationalFunction | None
    rhs: RationalFunction | None
    verdict: str  # equal | unequal | not_transversal
    detail: str = ""

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"


def verify_identity(sc: ProjScenario, b: BundleSpec) -> VerifyReport:
    """Compute both sides through their independent routes and compare."""
    try:
        rhs = ab_rhs(sc, b)
    except NotTransversalError as e:
        return VerifyReport(None, None, "not_transversal",
                            f"eigenvalues {e.i} and {e.j} coincide")
    lhs = lefschetz_lhs(sc, b)
    verdict = "equal" if rf_equal(lhs, rhs) else "unequal"
    return VerifyReport(lhs, rhs, verdict)
