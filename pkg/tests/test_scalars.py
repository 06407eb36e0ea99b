"""Polynomial and rational-function arithmetic against evaluation oracles."""

import random
from fractions import Fraction

from lefschetz.scalars import (MultiPoly, RF_ONE, RF_ZERO, RationalFunction,
                               probably_equal, rf_equal)


def random_poly(rng, names=("q", "t"), terms=4, span=5):
    out = MultiPoly()
    for _ in range(rng.randint(1, terms)):
        exps = {v: rng.randint(0, 3) for v in names}
        mono = MultiPoly.const(Fraction(rng.randint(-span, span), rng.randint(1, 3)))
        for v, e in exps.items():
            mono = mono * MultiPoly.variable(v) ** e
        out = out + mono
    return out


def test_poly_arithmetic_matches_fraction_evaluation():
    rng = random.Random(11)
    for _ in range(50):
        a, b = random_poly(rng), random_poly(rng)
        point = {"q": Fraction(rng.randint(1, 7), rng.randint(1, 5)),
                 "t": Fraction(rng.randint(-6, -1), rng.randint(1, 4))}
        av, bv = a.evaluate(point), b.evaluate(point)
        assert (a + b).evaluate(point) == av + bv
        assert (a - b).evaluate(point) == av - bv
        assert (a * b).evaluate(point) == av * bv
        assert (a**3).evaluate(point) == av**3


def test_poly_ring_laws():
    rng = random.Random(5)
    for _ in range(20):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_rational_function_cross_multiplication_equality():
    q = RationalFunction.variable("q")
    # (q^2 - 1)/(q - 1) and q + 1 differ as fractions but agree as values
    lhs = (q * q - 1) / (q - 1)
    rhs = q + 1
    assert rf_equal(lhs, rhs)
    assert not rf_equal(lhs, q)


def test_negative_powers_behave_like_laurent_monomials():
    q = RationalFunction.variable("q")
    assert rf_equal(q**-1 * q, RF_ONE)
    assert rf_equal(q**-3 * q**3, RF_ONE)
    assert rf_equal(q**-2, RF_ONE / (q * q))


def test_zero_and_constant_recognition():
    q = RationalFunction.variable("q")
    assert (q - q).is_zero()
    assert RF_ZERO.is_zero()
    assert ((q + 1) - q).is_constant()
    assert ((q + 1) - q).constant_value() == 1


def test_evaluation_of_quotients():
    q = RationalFunction.variable("q")
    v = ((q**3 - 1) / (q - 1)).evaluate({"q": Fraction(2)})
    assert v == 7


def test_probabilistic_equality_agrees_on_small_cases():
    q = RationalFunction.variable("q")
    assert probably_equal((q * q - 1) / (q - 1), q + 1, seed=3, trials=6)
    # distinct rational functions differ at almost every sample point
    assert not probably_equal(q + 1, q + 2, seed=3, trials=6)
    assert not probably_equal(q**2, q**3, seed=9, trials=6)
