"""Exact scalar arithmetic: rationals, sparse multivariate polynomials and
rational functions.

Every symbolic computation in the package is valued in the fraction field
Q(t1,...,tk).  Fractions are kept *unreduced*: equality is decided by
cross-multiplication, which is exact and avoids multivariate gcds.
Laurent behaviour (q^-1 and friends) is encoded by monomial denominators.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b)))


class MultiPoly:
    """Sparse polynomial over Q: a map from exponent vectors to coefficients.

    ``vars`` is an ordered tuple of variable names; every exponent vector has
    the same length.  Zero coefficients are never stored.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping | None = None):
        vs = tuple(vars)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(int(x) for x in exps)
                if len(e) != len(vs):
                    raise ValueError(f"exponent vector {e} does not match variables {vs}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e}; use a RationalFunction")
                c = Fraction(coeff)
                if c:
                    clean[e] = c
        self.vars = vs
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c, vars: Iterable[str] = ()) -> "MultiPoly":
        vs = tuple(vars)
        return cls(vs, {(0,) * len(vs): Fraction(c)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero if no terms)."""
        for e, c in self.terms.items():
            if any(e):
                raise ValueError("not a constant polynomial")
        return sum(self.terms.values(), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def with_vars(self, vars: tuple[str, ...]) -> "MultiPoly":
        """Re-express over a superset of the current variables."""
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        for v in self.vars:
            if v not in pos:
                raise ValueError(f"variable {v!r} missing from {vars}")
        n = len(vars)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * n
            for v, x in zip(self.vars, e):
                new[pos[v]] = x
            terms[tuple(new)] = c
        return MultiPoly(vars, terms)

    def _aligned(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        vs = _merge_vars(self.vars, other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(e, Fraction(0)) + ca * cb
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a MultiPoly; use a RationalFunction")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        # hash via variable-name/exponent pairs so padding variables don't matter
        items = frozenset(
            (frozenset((v, x) for v, x in zip(self.vars, e) if x), c)
            for e, c in self.terms.items()
        )
        return hash(items)

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for name, x in zip(self.vars, e):
                if x:
                    v *= Fraction(point[name]) ** x
            total += v
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{x}" if x > 1 else v
                for v, x in zip(self.vars, e)
                if x
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


class RationalFunction:
    """An unreduced fraction of two multivariate polynomials.

    The denominator is never zero; beyond that no normalization is performed.
    Use :func:`rf_equal` (cross-multiplication) to compare values.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = MultiPoly.const(num)
        if den is None:
            den = MultiPoly.const(1, num.vars)
        elif isinstance(den, (int, Fraction)):
            den = MultiPoly.const(den, num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RationalFunction")
        num, den = num._aligned(den)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls(MultiPoly.const(c))

    @classmethod
    def variable(cls, name: str) -> "RationalFunction":
        return cls(MultiPoly.variable(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    @staticmethod
    def _coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, MultiPoly):
            return RationalFunction(x)
        if isinstance(x, (int, Fraction)):
            return RationalFunction.const(x)
        raise TypeError(f"cannot coerce {x!r} to RationalFunction")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFunction(MultiPoly.const(0))
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero RationalFunction")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def equals(self, other) -> bool:
        o = self._coerce(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, MultiPoly, int, Fraction)):
            return self.equals(other)
        return NotImplemented

    def __hash__(self):
        if self.is_zero():
            return hash(Fraction(0))
        if self.is_constant():
            return hash(self.constant_value())
        return 0  # non-constant values hash to a common bucket; eq is exact

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return self.num.evaluate(point) / d

    def __str__(self):
        n, d = str(self.num), str(self.den)
        if d == "1":
            return n
        npart = n if ("+" not in n and "-" not in n.lstrip("-")) else f"({n})"
        dpart = d if ("+" not in d and "-" not in d.lstrip("-") and "*" not in d) else f"({d})"
        return f"{npart}/{dpart}"

    def __repr__(self):
        return f"RationalFunction({self})"


RF_ZERO = RationalFunction.const(0)
RF_ONE = RationalFunction.const(1)


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Exact equality of fractions by cross-multiplication."""
    return RationalFunction._coerce(a).equals(b)


def probably_equal(a: RationalFunction, b: RationalFunction, *, seed: int = 0,
                   trials: int = 8) -> bool:
    """Probabilistic equality test by evaluation at random rational points.

    A speed escape hatch for very large expressions: sound for inequality,
    only overwhelmingly likely for equality.  Never used by acceptance tests.
    """
    a = RationalFunction._coerce(a)
    b = RationalFunction._coerce(b)
    names = sorted(set(a.num.vars) | set(b.num.vars))
    rng = random.Random(seed)
    done = 0
    while done < trials:
        point = {v: Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3)) for v in names}
        try:
            va, vb = a.evaluate(point), b.evaluate(point)
        except ZeroDivisionError:
            continue
        if va != vb:
            return False
        done += 1
    return True
