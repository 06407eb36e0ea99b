"""Root systems, Weyl groups, and the character formula as a fixed-point
identity.

Weights live in fundamental-weight coordinates with exact rational pairings
derived from the Cartan matrix; no Euclidean embeddings are used, so G2
needs no irrational normalizations.  Characters are elements of the group
algebra of the weight lattice (WeightPolynomial); the quotient by the Weyl
denominator is an exact division under the height-then-lexicographic order.

The supported types are hardcoded Cartan tables guarded by invariant checks
(root counts, group orders), not a general Dynkin-diagram parser.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

CARTAN_TABLES: dict[str, list[list[int]]] = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
}

WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "G2": 12}
POSITIVE_ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "G2": 6}


def _mat_inv(a: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence) -> tuple:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word, lattice action, length and sign."""

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]  # action on fundamental-weight coords

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def act(self, weight: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(row[j] * weight[j] for j in range(len(weight)))
                     for row in self.matrix)


class RootSystem:
    """One of the supported irreducible root systems, with exact data."""

    def __init__(self, label: str):
        if label not in CARTAN_TABLES:
            raise ValueError(f"unsupported root system {label!r}; "
                             f"choose from {sorted(CARTAN_TABLES)}")
        self.label = label
        self.cartan = CARTAN_TABLES[label]
        self.rank = len(self.cartan)
        a = self.cartan
        self.cartan_inv = _mat_inv(a)
        # half square lengths d_i, from the symmetrizability d_i a_ij = d_j a_ji
        d = [Fraction(1)] * self.rank
        for _ in range(self.rank):
            for i in range(self.rank):
                for j in range(self.rank):
                    if a[i][j] and d[j] * a[j][i] != d[i] * a[i][j]:
                        d[j] = d[i] * a[i][j] / a[j][i]
        self.half_lengths = d
        # Gram matrix of fundamental weights: (w_i, w_j) = d_i * (A^-1)_ij
        self.gram = [[d[i] * self.cartan_inv[i][j] for j in range(self.rank)]
                     for i in range(self.rank)]
        for i in range(self.rank):
            for j in range(self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise AssertionError("Gram matrix is not symmetric")
        self.rho = (1,) * self.rank
        self.simple_roots = [tuple(a[i][j] for i in range(self.rank))
                             for j in range(self.rank)]
        self._elements: list[WeylElement] | None = None
        self._positive_roots: list[tuple[int, ...]] | None = None
        if len(self.positive_roots()) != POSITIVE_ROOT_COUNTS[label]:
            raise AssertionError(f"positive root count wrong for {label}")

    # -- pairings ----------------------------------------------------------

    def inner(self, mu, nu) -> Fraction:
        g = self.gram
        return sum(Fraction(mu[i]) * g[i][j] * nu[j]
                   for i in range(self.rank) for j in range(self.rank))

    def pair_coroot(self, mu, alpha) -> Fraction:
        """<mu, alpha^v> = 2 (mu, alpha) / (alpha, alpha)."""
        return 2 * self.inner(mu, alpha) / self.inner(alpha, alpha)

    def simple_root_coords(self, weight) -> tuple[Fraction, ...]:
        return _mat_vec(self.cartan_inv, weight)

    def height(self, weight) -> Fraction:
        return sum(self.simple_root_coords(weight))

    # -- reflections and the group ----------------------------------------

    def reflect_simple(self, i: int, weight: Sequence[int]) -> tuple[int, ...]:
        c = weight[i]
        alpha = self.simple_roots[i]
        return tuple(w - c * alpha[k] for k, w in enumerate(weight))

    def _reflection_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        basis = [tuple(int(k == j) for k in range(self.rank)) for j in range(self.rank)]
        cols = [self.reflect_simple(i, e) for e in basis]
        return tuple(tuple(cols[j][k] for j in range(self.rank))
                     for k in range(self.rank))

    def elements(self) -> list[WeylElement]:
        """Full enumeration by breadth-first closure under simple
        reflections; lengths equal BFS depth."""
        if self._elements is None:
            refl = [self._reflection_matrix(i) for i in range(self.rank)]
            ident = tuple(tuple(int(i == j) for j in range(self.rank))
                          for i in range(self.rank))
            seen = {ident: ()}
            frontier = [ident]
            while frontier:
                nxt = []
                for m in frontier:
                    for i, r in enumerate(refl):
                        prod = tuple(
                            tuple(sum(r[a][b] * m[b][c] for b in range(self.rank))
                                  for c in range(self.rank))
                            for a in range(self.rank))
                        if prod not in seen:
                            seen[prod] = seen[m] + (i,)
                            nxt.append(prod)
                frontier = nxt
            self._elements = sorted(
                (WeylElement(w, m) for m, w in seen.items()),
                key=lambda e: (e.length, e.word))
            if len(self._elements) != WEYL_ORDERS[self.label]:
                raise AssertionError(f"Weyl group order wrong for {self.label}")
        return self._elements

    def positive_roots(self) -> list[tuple[int, ...]]:
        """The W-orbit of the simple roots, filtered by nonnegative
        simple-root coordinates."""
        if self._positive_roots is None:
            orbit = set()
            for w in self.elements():
                for alpha in self.simple_roots:
                    orbit.add(w.act(alpha))
            pos = [v for v in orbit
                   if all(c >= 0 for c in self.simple_root_coords(v))]
            self._positive_roots = sorted(pos, key=lambda v: (self.height(v), v))
        return self._positive_roots


def build_root_system(label: str) -> RootSystem:
    return RootSystem(label)


def weyl_group(rs: RootSystem) -> list[WeylElement]:
    return rs.elements()


class WeightPolynomial:
    """An integer combination of formal exponentials of lattice weights:
    an element of the group algebra Z[weight lattice]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[tuple(int(x) for x in w)] = c
        self.terms = clean

    @classmethod
    def exponential(cls, weight, coeff: int = 1) -> "WeightPolynomial":
        return cls({tuple(weight): coeff})

    @classmethod
    def one(cls, rank: int) -> "WeightPolynomial":
        return cls({(0,) * rank: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def apply(self, w: WeylElement) -> "WeightPolynomial":
        return WeightPolynomial({w.act(k): c for k, c in self.terms.items()})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return WeightPolynomial(terms)

    def __neg__(self):
        return WeightPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return WeightPolynomial({w: c * other for w, c in self.terms.items()})
        terms: dict[tuple, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                terms[w] = terms.get(w, 0) + c1 * c2
        return WeightPolynomial(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WeightPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "WeightPolynomial(0)"
        bits = [f"{c}*e{list(w)}" for w, c in sorted(self.terms.items())]
        return "WeightPolynomial(" + " + ".join(bits) + ")"


class DivisionError(ArithmeticError):
    """Division in the group algebra left a nonzero remainder."""


def _leading(rs: RootSystem, p: WeightPolynomial) -> tuple:
    return max(p.terms, key=lambda w: (rs.height(w), w))


def exact_divide(rs: RootSystem, num: WeightPolynomial,
                 den: WeightPolynomial) -> WeightPolynomial:
    """Exact quotient by leading-term elimination under the
    height-then-lexicographic total order; raises on nonzero remainder."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero WeightPolynomial")
    lead_d = _leading(rs, den)
    coeff_d = den.terms[lead_d]
    quotient: dict[tuple, int] = {}
    rem = num
    steps = 0
    limit = 10000 + 100 * len(num.terms) * max(1, len(den.terms))
    while not rem.is_zero():
        steps += 1
        if steps > limit:
            raise DivisionError("division does not terminate")
        lead_r = _leading(rs, rem)
        c, r = divmod(rem.terms[lead_r], coeff_d)
        if r:
            raise DivisionError(f"leading coefficient {rem.terms[lead_r]} "
                                f"not divisible by {coeff_d}")
        w = tuple(a - b for a, b in zip(lead_r, lead_d))
        quotient[w] = quotient.get(w, 0) + c
        rem = rem - WeightPolynomial({w: c}) * den
    return WeightPolynomial(quotient)


def _check_dominant(lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def weyl_denominator(rs: RootSystem) -> WeightPolynomial:
    """Sum over W of sign(w) e^{w rho}."""
    total = WeightPolynomial()
    for w in rs.elements():
        total = total + WeightPolynomial.exponential(w.act(rs.rho), w.sign)
    return total


def denominator_product(rs: RootSystem) -> WeightPolynomial:
    """e^rho times the product over positive roots of (1 - e^{-alpha})."""
    total = WeightPolynomial.exponential(rs.rho)
    for alpha in rs.positive_roots():
        factor = (WeightPolynomial.one(rs.rank)
                  - WeightPolynomial.exponential(tuple(-a for a in alpha)))
        total = total * factor
    return total


def weyl_character(rs: RootSystem, lam) -> WeightPolynomial:
    """The character of the irreducible representation with highest weight
    lam: the alternating sum over W of e^{w(lam+rho)} divided exactly by the
    Weyl denominator."""
    lam = _check_dominant(lam)
    shifted = tuple(l + r for l, r in zip(lam, rs.rho))
    num = WeightPolynomial()
    for w in rs.elements():
        num = num + WeightPolynomial.exponential(w.act(shifted), w.sign)
    return exact_divide(rs, num, weyl_denominator(rs))


def fixed_point_character_sum(rs: RootSystem, lam) -> WeightPolynomial:
    """The fixed-point sum over the Weyl group: for each w, the numerator
    e^{w lam} weighted by the reciprocal of prod (1 - e^{-w alpha}), all
    cleared over the common Weyl denominator and divided exactly.

    Each local denominator is built directly from the w-transformed positive
    roots, mirroring det(1 - tangent action) at the flag-variety fixed
    points."""
    lam = _check_dominant(lam)
    denominator = weyl_denominator(rs)
    total = WeightPolynomial()
    for w in rs.elements():
        local = WeightPolynomial.one(rs.rank)
        for alpha in rs.positive_roots():
            neg = tuple(-a for a in w.act(alpha))
            local = local * (WeightPolynomial.one(rs.rank)
                             - WeightPolynomial.exponential(neg))
        cleared = exact_divide(rs, denominator, local)
        total = total + WeightPolynomial.exponential(w.act(lam)) * cleared
    return exact_divide(rs, total, denominator)


def freudenthal_multiplicities(rs: RootSystem, lam) -> dict[tuple, int]:
    """Weight multiplicities of the highest-weight representation by the
    Freudenthal recursion, iterated down the weight lattice from lam.  The
    independent oracle for the character formula."""
    lam = _check_dominant(lam)
    rho = rs.rho
    lam_rho = tuple(l + r for l, r in zip(lam, rho))
    norm_top = rs.inner(lam_rho, lam_rho)
    positive = rs.positive_roots()
    mult: dict[tuple, int] = {lam: 1}
    frontier = [lam]
    while frontier:
        nxt = []
        candidates = set()
        for mu in frontier:
            for alpha in rs.simple_roots:
                candidates.add(tuple(m - a for m, a in zip(mu, alpha)))
        for mu in sorted(candidates, key=lambda w: (rs.height(w), w), reverse=True):
            if mu in mult:
                continue
            mu_rho = tuple(m + r for m, r in zip(mu, rho))
            denom = norm_top - rs.inner(mu_rho, mu_rho)
            if denom <= 0:
                continue
            acc = Fraction(0)
            for alpha in positive:
                k = 1
                while True:
                    up = tuple(m + k * a for m, a in zip(mu, alpha))
                    m_up = mult.get(up, 0)
                    if rs.height(up) > rs.height(lam):
                        break
                    if m_up:
                        acc += m_up * rs.inner(up, alpha)
                    k += 1
            value = 2 * acc / denom
            if value.denominator != 1:
                raise AssertionError("Freudenthal recursion produced a non-integer")
            value = int(value)
            if value > 0:
                mult[mu] = value
                nxt.append(mu)
        frontier = nxt
    return mult


def weyl_dimension(rs: RootSystem, lam) -> int:
    """Dimension by the product formula over positive roots."""
    lam = _check_dominant(lam)
    lam_rho = tuple(l + r for l, r in zip(lam, rs.rho))
    value = Fraction(1)
    for alpha in rs.positive_roots():
        value *= rs.pair_coroot(lam_rho, alpha) / rs.pair_coroot(rs.rho, alpha)
    if value.denominator != 1 or value <= 0:
        raise AssertionError("Weyl dimension formula gave a non-positive or "
                             "non-integer value")
    return int(value)
