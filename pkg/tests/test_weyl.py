"""Weyl characters as a fixed-point identity, checked against the
Freudenthal recursion and the dimension product formula."""

import pytest

from lefschetz.weyl import (CARTAN_TABLES, DivisionError, POSITIVE_ROOT_COUNTS,
                            WEYL_ORDERS, WeightPolynomial, build_root_system,
                            denominator_product, exact_divide,
                            fixed_point_character_sum,
                            freudenthal_multiplicities, weyl_character,
                            weyl_denominator, weyl_dimension, weyl_group)
from lefschetz.projective import BundleSpec, ProjScenario, lefschetz_lhs
from lefschetz.scalars import RationalFunction, rf_equal


def test_group_orders_and_root_counts():
    for label in CARTAN_TABLES:
        rs = build_root_system(label)
        assert len(weyl_group(rs)) == WEYL_ORDERS[label]
        assert len(rs.positive_roots()) == POSITIVE_ROOT_COUNTS[label]


def test_sign_is_determinant_parity():
    rs = build_root_system("B2")
    for w in weyl_group(rs):
        assert w.sign == (-1) ** w.length


def test_denominator_identity_per_type():
    # sum of signed exponentials over W equals the product over positive roots
    for label in CARTAN_TABLES:
        rs = build_root_system(label)
        assert weyl_denominator(rs) == denominator_product(rs)


def test_characters_match_freudenthal_oracle():
    cases = [("A1", (4,)), ("A2", (2, 1)), ("B2", (1, 1)), ("G2", (0, 1)),
             ("A3", (1, 1, 0))]
    for label, lam in cases:
        rs = build_root_system(label)
        chi = weyl_character(rs, lam)
        assert chi.terms == freudenthal_multiplicities(rs, lam)


def test_fixed_point_sum_equals_character():
    cases = [("A1", (7,)), ("A2", (3, 0)), ("B2", (2, 1)), ("G2", (1, 1)),
             ("A3", (0, 2, 1))]
    for label, lam in cases:
        rs = build_root_system(label)
        assert fixed_point_character_sum(rs, lam) == weyl_character(rs, lam)


def test_known_dimensions():
    assert weyl_dimension(build_root_system("A2"), (1, 1)) == 8
    assert weyl_dimension(build_root_system("G2"), (1, 0)) == 14
    assert weyl_dimension(build_root_system("A1"), (1,)) == 2
    assert weyl_dimension(build_root_system("B2"), (0, 1)) == 4
    assert weyl_dimension(build_root_system("A3"), (1, 0, 0)) == 4


def test_coefficient_sum_is_dimension():
    cases = [("A1", (6,)), ("A2", (1, 2)), ("B2", (3, 0)), ("G2", (0, 2))]
    for label, lam in cases:
        rs = build_root_system(label)
        assert weyl_character(rs, lam).coefficient_sum() == weyl_dimension(rs, lam)


def test_character_is_weyl_invariant():
    rs = build_root_system("B2")
    chi = weyl_character(rs, (1, 2))
    for w in weyl_group(rs):
        assert chi.apply(w) == chi


def test_exact_division_rejects_nonzero_remainder():
    rs = build_root_system("A1")
    num = WeightPolynomial({(1,): 1, (0,): 1})
    den = WeightPolynomial({(1,): 1, (-1,): 1})
    with pytest.raises(DivisionError):
        exact_divide(rs, num, den)


def test_exact_division_round_trip():
    rs = build_root_system("A2")
    a = weyl_character(rs, (1, 0))
    b = weyl_character(rs, (0, 1))
    assert exact_divide(rs, a * b, b) == a


def test_non_dominant_weight_rejected():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        weyl_character(rs, (1, -1))
    with pytest.raises(ValueError):
        weyl_dimension(rs, (-2, 0))


def test_unknown_label_rejected():
    with pytest.raises(ValueError):
        build_root_system("C3")


def test_rank_one_character_matches_projective_line_sections():
    """Bridge between the two models: the rank-one character of highest
    weight n, multiplied by the global monomial e^{n omega} and written in
    the variable q = e^{2 omega}, is the trace on sections of O(n) for the
    scaling with eigenvalues (q, 1)."""
    rs = build_root_system("A1")
    q = RationalFunction.variable("q")
    sc = ProjScenario(1, [q, 1])
    for n in range(0, 8):
        chi = weyl_character(rs, (n,))
        shifted = chi * WeightPolynomial.exponential((n,))
        total = RationalFunction.const(0)
        for (m,), c in shifted.terms.items():
            assert m % 2 == 0  # lands in the q-lattice after the twist
            total = total + RationalFunction.const(c) * q ** (m // 2)
        assert rf_equal(total, lefschetz_lhs(sc, BundleSpec.line(n)))
