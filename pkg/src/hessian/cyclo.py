"""Exact arithmetic in Z[zeta_e] and Q(zeta_e).

An element of level ``e`` is a coefficient vector of length phi(e) in the power
basis 1, zeta, ..., zeta^{phi(e)-1} modulo the cyclotomic polynomial Phi_e, so
equality and integrality tests are coefficient comparisons.  Coefficients are
Python ints or ``fractions.Fraction``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from .errors import LevelMismatch


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Phi_e as integer coefficients, lowest degree first."""
    if e < 1:
        raise ValueError(f"level must be >= 1, got {e}")
    num = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for f in range(1, e):
        if e % f == 0:
            num = _exact_div(num, cyclotomic_polynomial(f))
    return tuple(num)


def _exact_div(num, den):
    """Quotient of integer polynomials (lowest first) with monic ``den``; remainder must vanish."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _power_table(e: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of zeta_e^j for 0 <= j < e."""
    n = phi(e)
    cp = cyclotomic_polynomial(e)
    rows = []
    v = [1] + [0] * (n - 1)
    for _ in range(e):
        rows.append(tuple(v))
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            v = [a - top * c for a, c in zip(v, cp)]
    return tuple(rows)


def _reduce(e: int, terms) -> tuple:
    """Reduce ``sum(c * zeta^j for j, c in terms)`` into the power basis."""
    n = phi(e)
    table = _power_table(e)
    out = [0] * n
    for j, c in terms:
        if c:
            j %= e
            if j < n:
                out[j] += c
            else:
                for i, t in enumerate(table[j]):
                    if t:
                        out[i] += c * t
    return tuple(out)


class CycNumber:
    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != phi(level):
            raise ValueError(f"level {level} needs {phi(level)} coefficients, got {len(coeffs)}")
        self.level = level
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_int(cls, level: int, n) -> CycNumber:
        return cls(level, (n,) + (0,) * (phi(level) - 1))

    @classmethod
    def zero(cls, level: int) -> CycNumber:
        return cls.from_int(level, 0)

    @classmethod
    def one(cls, level: int) -> CycNumber:
        return cls.from_int(level, 1)

    @classmethod
    def from_exponent_counts(cls, level: int, counts) -> CycNumber:
        """``sum(counts[j] * zeta^j)`` for a histogram of exponents mod ``level``."""
        return cls(level, _reduce(level, ((j, int(c)) for j, c in enumerate(counts))))

    @classmethod
    def from_poly(cls, level: int, poly) -> CycNumber:
        """Reduce an arbitrary-length coefficient list (lowest first) modulo Phi_level."""
        return cls(level, _reduce(level, enumerate(poly)))

    # -- arithmetic -----------------------------------------------------------

    def _other(self, other) -> CycNumber:
        if isinstance(other, CycNumber):
            if other.level != self.level:
                raise LevelMismatch(f"levels {self.level} and {other.level} differ")
            return other
        if isinstance(other, (int, Rational)):
            return CycNumber.from_int(self.level, other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CycNumber(self.level, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.level, (-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return CycNumber(self.level, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CycNumber(self.level, (a * other for a in self.coeffs))
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNumber(self.level, _reduce(self.level, enumerate(prod)))

    __rmul__ = __mul__

    def __truediv__(self, n):
        if not isinstance(n, (int, Rational)):
            return NotImplemented
        return CycNumber(self.level, (Fraction(a) / n for a in self.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = CycNumber.one(self.level), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> CycNumber:
        """Complex conjugation zeta -> zeta^{-1}."""
        return self.galois(-1)

    def galois(self, a: int) -> CycNumber:
        """The automorphism zeta -> zeta^a, ``a`` coprime to the level."""
        if gcd(a, self.level) != 1:
            raise ValueError(f"{a} is not a unit mod {self.level}")
        return CycNumber(self.level, _reduce(self.level, ((a * j, c) for j, c in enumerate(self.coeffs))))

    def embed(self, new_level: int) -> CycNumber:
        """Image under Q(zeta_e) -> Q(zeta_E), zeta_e -> zeta_E^{E/e}."""
        if new_level % self.level:
            raise LevelMismatch(f"{self.level} does not divide {new_level}")
        step = new_level // self.level
        return CycNumber(new_level, _reduce(new_level, ((step * j, c) for j, c in enumerate(self.coeffs))))

    def norm_sq(self) -> CycNumber:
        return self * self.conjugate()

    # -- predicates -----------------------------------------------------------

    def as_rational(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def as_rational_integer(self) -> int | None:
        c = self.as_rational()
        if c is None:
            return None
        if isinstance(c, Fraction):
            if c.denominator != 1:
                return None
            return int(c.numerator)
        return int(c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def complex_value(self, j: int = 1) -> complex:
        """Floating-point shadow at zeta = exp(2 pi i j / e); a cross-check only."""
        z = cmath.exp(2j * cmath.pi * j / self.level)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            return self.as_rational() == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        if other.level != self.level:
            lvl = self.level * other.level // gcd(self.level, other.level)
            return self.embed(lvl).coeffs == other.embed(lvl).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*z^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return f"CycNumber[{self.level}]({' + '.join(terms) or '0'})"


def root_of_unity(e: int, j: int = 1) -> CycNumber:
    return CycNumber(e, _power_table(e)[j % e])


class CycPoly:
    """Polynomial in T with coefficients in Q(zeta_e), lowest degree first."""

    def __init__(self, level: int, coeffs):
        coeffs = [c if isinstance(c, CycNumber) else CycNumber.from_int(level, c) for c in coeffs]
        for c in coeffs:
            if c.level != level:
                raise LevelMismatch(f"coefficient of level {c.level} in a level-{level} polynomial")
        self.level = level
        self.coeffs = coeffs

    @classmethod
    def one(cls, level: int) -> CycPoly:
        return cls(level, [1])

    def mul_binomial(self, c: CycNumber, f: int) -> CycPoly:
        """Multiply by (1 - c * T^f)."""
        out = list(self.coeffs) + [CycNumber.zero(self.level)] * f
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a.is_zero():
                out[i + f] = out[i + f] - c * a
        return CycPoly(self.level, out)

    def __mul__(self, other: CycPoly) -> CycPoly:
        if other.level != self.level:
            raise LevelMismatch("polynomials of different levels")
        out = [CycNumber.zero(self.level) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return CycPoly(self.level, out)

    def integer_coeffs(self) -> list[int] | None:
        """Coefficients as rational integers, or None if any is not in Z."""
        out = []
        for c in self.coeffs:
            n = c.as_rational_integer()
            if n is None:
                return None
            out.append(n)
        return out
