"""Equivariant line bundles on projective space: the two sides of the
fixed-point identity through their independent routes."""

import math
import random

import pytest

from lefschetz.projective import (BundleSpec, NotTransversalError,
                                  ProjScenario, ab_rhs, cohomology_action,
                                  fixed_points, lambda_x, lefschetz_lhs,
                                  skyscraper_local_trace, tangent_action,
                                  verify_identity)
from lefschetz.linalg import Matrix, det
from lefschetz.sampling import (random_matrix, random_nonzero_fraction,
                                random_scenario)
from lefschetz.scalars import RF_ONE, RationalFunction, rf_equal


Q = RationalFunction.variable("q")
LINE = ProjScenario(1, [Q, 1])


def geometric_sum(n):
    """1 + q + ... + q^n, built termwise (no shared code with either side)."""
    total = RationalFunction.const(0)
    for k in range(n + 1):
        total = total + Q**k
    return total


def test_line_positive_twists_match_geometric_sums():
    for n in (0, 1, 2, 3, 5):
        r = verify_identity(LINE, BundleSpec.line(n))
        assert r.verdict == "equal"
        assert rf_equal(r.lhs, geometric_sum(n))
        closed = (Q ** (n + 1) - 1) / (Q - 1)
        assert rf_equal(r.lhs, closed)
        assert rf_equal(r.rhs, closed)


def test_line_acyclic_twist_gives_zero():
    r = verify_identity(LINE, BundleSpec.line(-1))
    assert r.verdict == "equal"
    assert r.lhs.is_zero() and r.rhs.is_zero()


def test_line_negative_twists_match_negative_laurent_sums():
    for n in (-2, -3, -5):
        r = verify_identity(LINE, BundleSpec.line(n))
        assert r.verdict == "equal"
        expected = RationalFunction.const(0)
        for k in range(-n - 1):
            expected = expected - Q ** (-(k + 1))
        assert rf_equal(r.lhs, expected)


def test_structure_sheaf_fixed_point_sum_is_one_symbolic():
    for n in range(1, 5):
        sc = ProjScenario(n, [Q**k for k in range(n + 1)])
        assert rf_equal(ab_rhs(sc, BundleSpec.line(0)), RF_ONE)


def test_structure_sheaf_fixed_point_sum_is_one_random():
    rng = random.Random(61)
    for _ in range(20):
        n = rng.randint(1, 4)
        eigs = []
        while len(eigs) < n + 1:
            e = random_nonzero_fraction(rng, 9)
            if e not in eigs:
                eigs.append(e)
        sc = ProjScenario(n, eigs)
        assert rf_equal(ab_rhs(sc, BundleSpec.line(0)), RF_ONE)


def test_random_scenarios_verify_equal():
    rng = random.Random(62)
    for _ in range(25):
        sc, b = random_scenario(rng)
        assert verify_identity(sc, b).verdict == "equal"


def test_both_sides_additive_in_the_bundle():
    rng = random.Random(63)
    sc, _ = random_scenario(rng)
    b1, b2 = BundleSpec.line(2), BundleSpec.line(-3, 5)
    both = BundleSpec(b1.summands + b2.summands)
    assert rf_equal(lefschetz_lhs(sc, both),
                    lefschetz_lhs(sc, b1) + lefschetz_lhs(sc, b2))
    assert rf_equal(ab_rhs(sc, both), ab_rhs(sc, b1) + ab_rhs(sc, b2))


def test_scalar_twist_scales_both_sides():
    sc = ProjScenario(2, [Q, 1, Q**2])
    plain = BundleSpec.line(1)
    scaled = BundleSpec.line(1, 7)
    seven = RationalFunction.const(7)
    assert rf_equal(lefschetz_lhs(sc, scaled), seven * lefschetz_lhs(sc, plain))
    assert rf_equal(ab_rhs(sc, scaled), seven * ab_rhs(sc, plain))


def test_cohomology_dimensions():
    sc = ProjScenario(2, [Q, 1, Q**2])
    # H^0(O(m)) has binomial(m + n, n) monomials
    for m in range(0, 5):
        action = cohomology_action(sc, m)
        assert action.source.dim(0) == math.comb(m + 2, 2)
    # acyclic range -n..-1
    for m in (-1, -2):
        assert cohomology_action(sc, m).source.total_dim() == 0
    # H^n(O(m)) is Serre-dual to H^0(O(-m - n - 1))
    for m in (-3, -4, -6):
        action = cohomology_action(sc, m)
        assert action.source.dim(2) == math.comb(-m - 1, 2)


def test_coincident_eigenvalues_report_not_transversal():
    sc = ProjScenario(1, [Q, Q])
    with pytest.raises(NotTransversalError):
        fixed_points(sc)
    r = verify_identity(sc, BundleSpec.line(1))
    assert r.verdict == "not_transversal"
    assert r.lhs is None and r.rhs is None


def test_skyscraper_local_trace_is_det_one_minus():
    rng = random.Random(64)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        assert rf_equal(skyscraper_local_trace(a),
                        det(Matrix.identity(n) - a))


def test_skyscraper_times_lambda_is_one_at_fixed_points():
    rng = random.Random(65)
    for _ in range(10):
        sc, _ = random_scenario(rng)
        for x in fixed_points(sc):
            product = skyscraper_local_trace(tangent_action(x)) * lambda_x(sc, x)
            assert rf_equal(product, RF_ONE)


def test_scenario_input_validation():
    with pytest.raises(ValueError):
        ProjScenario(0, [Q])
    with pytest.raises(ValueError):
        ProjScenario(1, [Q, 1, 1])
    with pytest.raises(ValueError):
        ProjScenario(1, [Q, 0])
    with pytest.raises(ValueError):
        BundleSpec([])
    with pytest.raises(ValueError):
        BundleSpec([(1, 0)])
