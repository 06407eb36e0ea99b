"""Seeded property suites for the finite kernel model.

Each suite runs a number of random trials and reports per-property pass
counts plus the first counterexample (with its seed) on failure.  These are
the executable forms of the structural facts the kernel calculus is built
on: trace functoriality, cyclicity, the agreement of the categorical and
direct Chern characters, and the fixed-point description of integration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .kernels import (FinObj, check_triangle_identities, chern_character,
                      chern_direct, compose_kernels, compose_lax_squares,
                      integrate, lefschetz_discrete, pushforward_kernel,
                      trace_of_kernel, trace_of_lax_square)
from .sampling import (random_equivariant_instance, random_kernel,
                       random_lax_square, random_map)
from .scalars import RF_ZERO, rf_equal


@dataclass
class PropertyResult:
    name: str
    trials: int
    passed: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


@dataclass
class SelfTestReport:
    seed: int
    trials: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def _run(name: str, seed: int, trials: int, one_trial) -> PropertyResult:
    passed = 0
    counterexample = None
    for k in range(trials):
        rng = random.Random(f"{seed}:{name}:{k}")
        if one_trial(rng):
            passed += 1
        elif counterexample is None:
            counterexample = f"trial {k} (seed {seed})"
    return PropertyResult(name, trials, passed, counterexample)


def _chern_agreement(rng: random.Random) -> bool:
    dims, twists, f = random_equivariant_instance(rng)
    cat = chern_character(dims, twists, f)
    direct = chern_direct(dims, twists, f)
    return len(cat) == len(direct) and all(rf_equal(a, b) for a, b in zip(cat, direct))


def _integral_lefschetz(rng: random.Random) -> bool:
    dims, twists, f = random_equivariant_instance(rng)
    weights = integrate(f)
    ch = chern_character(dims, twists, f)
    total = RF_ZERO
    for j, c in enumerate(ch):
        total = total + weights[0, j] * c
    return rf_equal(total, lefschetz_discrete(dims, twists, f))


def _pushforward_trace(rng: random.Random) -> bool:
    size = rng.randint(1, 5)
    f = random_map(rng, size)
    space = trace_of_kernel(pushforward_kernel(f))
    return space.total_dim() == sum(1 for s, v in enumerate(f) if v == s)


def _functoriality(rng: random.Random) -> bool:
    x = FinObj(rng.randint(1, 3))
    y = FinObj(rng.randint(1, 3))
    z = FinObj(rng.randint(1, 3))
    sq1 = random_lax_square(rng, x, y)
    sq2 = random_lax_square(rng, y, z, f_x=sq1.f_y)
    pasted = trace_of_lax_square(compose_lax_squares(sq1, sq2))
    product = trace_of_lax_square(sq2) @ trace_of_lax_square(sq1)
    return pasted.equals(product)


def _cyclicity(rng: random.Random) -> bool:
    s = FinObj(rng.randint(1, 4))
    t = FinObj(rng.randint(1, 4))
    k = random_kernel(rng, s, t)
    l = random_kernel(rng, t, s)
    lk = trace_of_kernel(compose_kernels(l, k))
    kl = trace_of_kernel(compose_kernels(k, l))
    return lk.total_dim() == kl.total_dim()


def _triangles(rng: random.Random) -> bool:
    s = FinObj(rng.randint(1, 3))
    t = FinObj(rng.randint(1, 3))
    return check_triangle_identities(random_kernel(rng, s, t))


_PROPERTIES = [
    ("chern_categorical_equals_direct", _chern_agreement),
    ("integral_of_chern_is_lefschetz", _integral_lefschetz),
    ("pushforward_trace_counts_fixed_points", _pushforward_trace),
    ("trace_map_functoriality", _functoriality),
    ("trace_cyclicity_dimensions", _cyclicity),
    ("dual_triangle_identities", _triangles),
]


def run_selftest(seed: int = 0, trials: int = 100) -> SelfTestReport:
    """Run every property suite with the given seed and trial count."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = SelfTestReport(seed, trials)
    for name, fn in _PROPERTIES:
        report.results.append(_run(name, seed, trials, fn))
    return report
