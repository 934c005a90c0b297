"""Multiplicative characters and exact Jacobi sums.

A character on F_r^x is stored as a level ``e`` dividing r-1 and an exponent
``c`` with chi(g^k) = zeta_e^{c*k}, g the generator of the field context.  The
trivial character takes the value 1 at 0, every other character takes 0.

Small fields are summed directly into a histogram of zeta-exponents.  Fields
past ``BRUTE_FORCE_LIMIT`` go through the p-adic route in ``padic``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclo import CycNumber
from .errors import BadResidue, DegreeMismatch, InputError, InvariantFailure, NotInG
from .gf import FieldCtx, PrimePower, make_field, prime_power
from .orbits import level, multiplicative_order
from .padic import jacobi_sum_padic

BRUTE_FORCE_LIMIT = 3000  # largest r summed directly in jacobi_sum3
FOUR_SUM_LIMIT = 400  # largest r for the direct 4-variable sum in jprime


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, eq=False)
class Character:
    ctx: FieldCtx
    level: int
    exponent: int

    def __post_init__(self):
        if (self.ctx.r - 1) % self.level:
            raise DegreeMismatch(f"level {self.level} does not divide {self.ctx.r - 1}")

    @property
    def order(self) -> int:
        return self.level // gcd(self.level, self.exponent)

    def is_trivial(self) -> bool:
        return self.order == 1

    def normalized(self) -> tuple[int, int]:
        """(order, exponent at that level), a canonical key."""
        g = gcd(self.level, self.exponent)
        return self.level // g, (self.exponent // g) % (self.level // g)

    def at_level(self, E: int) -> int:
        """Exponent of this character written at a level E that it divides."""
        if E % self.level:
            raise DegreeMismatch(f"{self.level} does not divide {E}")
        return self.exponent * (E // self.level) % E

    def exponent_of(self, x) -> int | None:
        """k*c mod level for x = g^k; None at zero."""
        x = self.ctx(x)
        if x.is_zero():
            return None
        return x.dlog * self.exponent % self.level

    def __call__(self, x) -> CycNumber:
        k = self.exponent_of(x)
        if k is None:
            return CycNumber.from_int(self.level, 1 if self.is_trivial() else 0)
        return CycNumber.from_exponent_counts(self.level, [0] * k + [1])

    def sign(self) -> int:
        """chi(-1) as a rational integer."""
        k = (self.ctx.r - 1) // 2 * self.exponent % self.level
        return 1 if k == 0 else -1

    def __mul__(self, other: Character) -> Character:
        if other.ctx is not self.ctx:
            raise InputError("characters on different fields")
        E = _lcm(self.level, other.level)
        return Character(self.ctx, E, (self.at_level(E) + other.at_level(E)) % E)

    def __pow__(self, k: int) -> Character:
        return Character(self.ctx, self.level, self.exponent * k % self.level)

    def lift(self, big: FieldCtx) -> Character:
        """chi composed with the norm from ``big``, whose ``subfield`` is this field."""
        if big.subfield(self.ctx.ext_degree) is not self.ctx:
            raise DegreeMismatch("field is not the tower subfield of the target")
        return Character(big, self.level, self.exponent)

    def __eq__(self, other):
        return isinstance(other, Character) and other.ctx is self.ctx and other.normalized() == self.normalized()

    def __hash__(self):
        return hash((id(self.ctx), self.normalized()))

    def __repr__(self):
        return f"Character(r={self.ctx.r}, level={self.level}, exponent={self.exponent})"


@dataclass(frozen=True)
class JacobiValue:
    value: CycNumber
    field_size: int


def teichmuller(ctx: FieldCtx) -> Character:
    """g^k -> zeta_{r-1}^k."""
    return Character(ctx, ctx.r - 1, 1)


def t_m(ctx: FieldCtx, d: int, m: int) -> Character:
    """The character g^k -> zeta_d^{m*k} on a field F_{q^{s|m|}}.

    Because subfield generators are powers of the big generator, the same
    rule on a larger tower member is the lift through the norm.
    """
    if m % d == 0:
        raise BadResidue(f"m = {m} is 0 mod {d}")
    e = level(d, m)
    return Character(ctx, e, (m // (d // e)) % e)


# -- direct summation -----------------------------------------------------------


def _exponent_table(chi: Character, E: int) -> tuple[np.ndarray, np.ndarray]:
    """Per code: exponent at level E and a 0/1 weight (chi(x) = weight * zeta^exp)."""
    ctx = chi.ctx
    c = chi.at_level(E)
    exps = (ctx.log * c) % E
    weight = np.ones(ctx.r, dtype=np.int64)
    exps[0] = 0
    if not chi.is_trivial():
        weight[0] = 0
    return exps, weight


def jacobi_histogram(ctx: FieldCtx, chis, E: int, rows=None) -> np.ndarray:
    """Counts of zeta_E-exponents in sum_{x1+x2+x3=1} chi1(x1)chi2(x2)chi3(x3).

    ``rows`` restricts x1 to a range of codes; histograms of disjoint ranges
    add up to the full one.
    """
    (e1, w1), (e2, w2), (e3, w3) = (_exponent_table(c, E) for c in chis)
    hist = np.zeros(E, dtype=np.int64)
    codes = np.arange(ctx.r, dtype=np.int64)
    rows = range(ctx.r) if rows is None else rows
    for x1 in rows:
        if not w1[x1]:
            continue
        w = int(ctx.sub_codes(1, x1))
        x3 = ctx.sub_codes(w, codes)
        weight = w2 * w3[x3]
        k = (e1[x1] + e2 + e3[x3]) % E
        hist += np.bincount(k, weights=weight, minlength=E).astype(np.int64)
    return hist


def _common_level(chis) -> int:
    E = 1
    for c in chis:
        E = _lcm(E, c.level)
    return E


def _min_poly_of_power(ctx: FieldCtx, E: int) -> tuple[int, ...]:
    """Minimal polynomial over F_p of g^{(r-1)/E}, high to low."""
    z = ctx.generator ** ((ctx.r - 1) // E)
    o = multiplicative_order(ctx.p, E)
    poly = [ctx(1)]
    for j in range(o):
        c = z ** (ctx.p**j)
        poly = [b - c * a for a, b in zip(poly + [ctx(0)], [ctx(0)] + poly)]
    return tuple(a.code for a in reversed(poly))


def jacobi_sum3(ctx: FieldCtx, chi1: Character, chi2: Character, chi3: Character,
                method: str = "auto") -> JacobiValue:
    """Exact j_r(chi1, chi2, chi3) = sum over x1+x2+x3 = 1 of chi1(x1)chi2(x2)chi3(x3).

    ``method`` is "direct", "padic" or "auto" (direct up to BRUTE_FORCE_LIMIT).
    """
    chis = (chi1, chi2, chi3)
    if any(c.ctx is not ctx for c in chis):
        raise InputError("characters must live on the given field")
    E = _common_level(chis)
    if method == "auto":
        method = "direct" if ctx.r <= BRUTE_FORCE_LIMIT else "padic"
    if method == "direct":
        value = CycNumber.from_exponent_counts(E, jacobi_histogram(ctx, chis, E))
    elif method == "padic":
        exps = tuple(c.at_level(E) for c in chis)
        value = jacobi_sum_padic(ctx.p, ctx.degree, E, exps, _min_poly_of_power(ctx, E))
    else:
        raise InputError(f"unknown method {method!r}")
    return JacobiValue(value=value, field_size=ctx.r)


def jacobi_exponents(pp: PrimePower, n: int, E: int, exps: tuple[int, int, int],
                     method: str = "auto", cache_dir: str | None = None) -> CycNumber:
    """j over F_{q^n} of the characters g^k -> zeta_E^{exps[j]*k}.

    Builds a field context only when summing directly, so it also serves
    fields far beyond the table limit.
    """
    r = pp.q**n
    if method == "auto":
        method = "direct" if r <= BRUTE_FORCE_LIMIT else "padic"
    if method == "padic":
        return jacobi_sum_padic(pp.p, pp.k * n, E, exps)
    ctx = make_field(pp, n, cache_dir=cache_dir)
    chis = [Character(ctx, E, c) for c in exps]
    return jacobi_sum3(ctx, *chis, method=method).value


def _as_pp(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else prime_power(q)


def ja(d: int, q, m: int, method: str = "auto", cache_dir: str | None = None) -> JacobiValue:
    """Ja(m) = j(t_m, t_m, t_m) over F_{q^{|m|}}, at level d/gcd(d, m)."""
    pp = _as_pp(q)
    if m % d == 0:
        raise BadResidue(f"m = {m} is 0 mod {d}")
    e = level(d, m)
    if e in (1, 3):
        raise BadResidue(f"m = {m} is outside Z_{d}")
    f = multiplicative_order(pp.q, e)
    c = (m // (d // e)) % e
    value = jacobi_exponents(pp, f, e, (c, c, c), method=method, cache_dir=cache_dir)
    return JacobiValue(value=value, field_size=pp.q**f)


def t_m_sign(d: int, q, m: int) -> int:
    """t_m(-1) on F_{q^{|m|}}, computed from exponents only."""
    pp = _as_pp(q)
    e = level(d, m)
    r = pp.q ** multiplicative_order(pp.q, e)
    c = (m // (d // e)) % e
    return -1 if ((r - 1) // 2 * c) % e else 1


# -- the four-variable sums -----------------------------------------------------


def _pair_table(ctx: FieldCtx, ea, wa, eb, wb, E: int) -> np.ndarray:
    """T[s, k] = number of (x, y), x + y = s, with chi_a(x)chi_b(y) = zeta_E^k (weighted)."""
    r = ctx.r
    codes = np.arange(r, dtype=np.int64)
    table = np.zeros(r * E, dtype=np.int64)
    for x in range(r):
        if not wa[x]:
            continue
        s = ctx.add_codes(x, codes)
        k = (ea[x] + eb) % E
        table += np.bincount(s * E + k, weights=wb, minlength=r * E).astype(np.int64)
    return table.reshape(r, E)


def four_sum_direct(ctx: FieldCtx, chis, E: int) -> CycNumber:
    """sum over x0+x1+x2+x3 = 0 of prod chi_i(x_i), by pairing (x0,x1) with (x2,x3)."""
    tabs = [_exponent_table(c, E) for c in chis]
    left = _pair_table(ctx, *tabs[0], *tabs[1], E)
    right = _pair_table(ctx, *tabs[2], *tabs[3], E)
    right = right[ctx.neg_table]  # row s now counts x2 + x3 = -s
    cross = left.T @ right  # cross[i, j] = sum_s left[s, i] * right[-s, j]
    idx = (np.arange(E)[:, None] + np.arange(E)[None, :]) % E
    hist = np.zeros(E, dtype=np.int64)
    np.add.at(hist, idx.ravel(), cross.ravel())
    return CycNumber.from_exponent_counts(E, hist)


def jprime(d: int, q, a, method: str = "auto", cache_dir: str | None = None) -> CycNumber:
    """Ja'(a0, a1, a2, a3) for a in G_d, over F_{q^{|A|}}.

    Zero when some but not all a_i vanish.  Otherwise computed either as the
    normalized four-variable sum (small fields) or from the relation
    Ja'(a) = (chi0 chi1 chi2)(-1) * j(chi0, chi1, chi2).
    """
    pp = _as_pp(q)
    a = tuple(x % d for x in a)
    if len(a) != 4:
        raise InputError("a must have four coordinates")
    if sum(a) % d:
        raise NotInG(f"{a} does not sum to 0 mod {d}")
    zeros = sum(1 for x in a if x == 0)
    if zeros == 4:
        raise NotInG("a must be nonzero")
    E = 1
    for x in a:
        E = _lcm(E, level(d, x))
    if zeros:
        return CycNumber.zero(E)
    f = multiplicative_order(pp.q, E)
    r = pp.q**f
    exps = [(x * E // d) % E for x in a]
    if method == "auto":
        method = "direct" if r <= FOUR_SUM_LIMIT else "link"
    if method == "direct":
        ctx = make_field(pp, f, cache_dir=cache_dir)
        chis = [Character(ctx, E, c) for c in exps]
        total = four_sum_direct(ctx, chis, E)
        out = CycNumber(E, (c // (r - 1) for c in total.coeffs))
        if out * (r - 1) != total:
            raise InvariantFailure("four-variable sum not divisible by r - 1")
        return out
    if method != "link":
        raise InputError(f"unknown method {method!r}")
    j = jacobi_exponents(pp, f, E, tuple(exps[:3]), cache_dir=cache_dir)
    k = sum(exps[:3]) * ((r - 1) // 2) % E
    return j if k == 0 else -j
