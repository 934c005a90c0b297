"""Jacobi sums in fields too large to enumerate, via the p-adic Gamma function.

Over F_r with r = p^F, let omega be the Teichmueller character.  The
Gross-Koblitz formula writes each Gauss sum g(omega^{-a}) as a power of pi
times a product of Morita Gamma values at the fractions <p^i a / (r-1)>.  A
Jacobi sum of three characters is g1*g2*g3 / g(chi1*chi2*chi3), so its image in
Z_p is (-p)^t times a ratio of Gamma products.  Doing this for every Galois
conjugate and gluing the results with the idempotents of Z_p[y]/(Phi_e)
recovers the exact element of Z[zeta_e].
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, gcd

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_compose_mod,
    gf_factor_sqf,
    gf_gcdex,
    gf_mul,
    gf_pow_mod,
    gf_quo,
    gf_rem,
)

from .cyclo import CycNumber, cyclotomic_polynomial, phi
from .errors import InputError
from .orbits import multiplicative_order


class MoritaGamma:
    """Morita's p-adic Gamma function modulo p^N.

    For an integer n >= 0, Gamma_p(n) = (-1)^n * prod(j for 0 < j < n, p !| j).
    The product over [0, n) is taken in blocks of length p^i read off the
    base-p digits of n, each block being the polynomial
    P_i(x) = prod(x + j for 0 <= j < p^i, p !| j) evaluated at a multiple of
    p^i.  Since x^k is then divisible by p^{ik}, P_i is kept only to degree
    ceil(N/i).
    """

    def __init__(self, p: int, N: int):
        if N < 1:
            raise InputError(f"precision must be >= 1, got {N}")
        self.p = p
        self.N = N
        self.M = p**N
        first = [1]
        for j in range(1, p):
            first = _poly_mul_trunc(first, [j, 1], self._deg(1), self.M)
        self._blocks = [None, first]

    def _deg(self, i: int) -> int:
        return -(-self.N // i)

    def _block(self, i: int) -> list[int]:
        while len(self._blocks) <= i:
            j = len(self._blocks) - 1
            prev = self._blocks[j]
            keep = self._deg(j + 1)
            out = [1]
            for c in range(self.p):
                out = _poly_mul_trunc(out, _taylor_shift(prev, c * self.p**j, keep, self.M), keep, self.M)
            self._blocks.append(out)
        return self._blocks[i]

    def __call__(self, n: int) -> int:
        """Gamma_p(n) mod p^N for an integer n; only n mod p^N matters."""
        p, M = self.p, self.M
        n %= M
        digits = []
        x = n
        for _ in range(self.N):
            digits.append(x % p)
            x //= p
        acc, base = 1, 0
        for i in range(self.N - 1, 0, -1):
            poly = self._block(i) if digits[i] else None
            for c in range(digits[i]):
                acc = acc * _horner(poly, base + c * p**i, M) % M
            base += digits[i] * p**i
        for c in range(digits[0]):
            s = base + c
            if s % p:
                acc = acc * s % M
        return (-acc if n & 1 else acc) % M

    def at_fraction(self, b: int, e: int) -> int:
        """Gamma_p(b/e) mod p^N for e prime to p."""
        return self(b * pow(e, -1, self.M) % self.M)


def _horner(poly, x, M):
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % M
    return acc


def _poly_mul_trunc(a, b, keep, M):
    out = [0] * min(keep, len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if i >= keep:
            break
        if x:
            for j, y in enumerate(b[: keep - i]):
                out[i + j] += x * y
    return [c % M for c in out]


def _taylor_shift(poly, s, keep, M):
    """Coefficients of poly(x + s), truncated to degree < keep."""
    n = len(poly)
    out = []
    for j in range(min(keep, n)):
        acc = 0
        sp = 1
        for k in range(j, n):
            acc += poly[k] * comb(k, j) * sp
            sp *= s
        out.append(acc % M)
    return out


def gk_conjugate_value(p: int, F: int, e: int, A: tuple[int, int, int], gamma: MoritaGamma) -> int:
    """Image in Z/p^N of the Jacobi sum of omega^{-A_j (r-1)/e}, j = 1, 2, 3.

    Requires every A_j and their sum to be nonzero mod e, and e | p^F - 1.
    """
    A4 = sum(A) % e
    if any(a % e == 0 for a in A) or A4 == 0:
        raise InputError("Gross-Koblitz route needs nontrivial characters with nontrivial product")
    o = multiplicative_order(p, e)
    if F % o:
        raise InputError(f"level {e} does not divide {p}^{F} - 1")
    M = gamma.M
    num, den, t = 1, 1, 0
    pi = 1
    for _ in range(o):
        b = [a * pi % e for a in A]
        b4 = A4 * pi % e
        t += sum(b) - b4
        for bj in b:
            num = num * gamma.at_fraction(bj, e) % M
        den = den * gamma.at_fraction(b4, e) % M
        pi = pi * p % e
    reps = F // o
    t = t // e * reps
    ratio = pow(num * pow(den, -1, M) % M, reps, M)
    return pow(-p, t, M) * ratio % M


# -- gluing conjugates in Z_p[y]/(Phi_e) ---------------------------------------


def _zz(poly):
    return [ZZ(int(c)) for c in poly]


@lru_cache(maxsize=None)
def factors_mod_p(e: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Monic irreducible factors of Phi_e over F_p (high to low), sorted."""
    f = _zz(reversed(cyclotomic_polynomial(e)))
    f = [c % p for c in f]
    _, facs = gf_factor_sqf(_zz(f), p, ZZ)
    return tuple(sorted(tuple(int(c) for c in h) for h in facs))


@lru_cache(maxsize=None)
def coefficient_bound(e: int) -> float:
    """Max over j of sum_u |L_{u,j}|, with L the inverse of the conjugate Vandermonde.

    If every conjugate of x in Z[zeta_e] has absolute value at most R, each
    power-basis coefficient of x is at most R times this bound.
    """
    n = phi(e)
    units = [u for u in range(1, e + 1) if gcd(u, e) == 1][:n]
    j = np.arange(n)
    V = np.exp(2j * np.pi * np.outer(units, j) / e)
    Vinv = np.linalg.inv(V)
    return float(np.abs(Vinv).sum(axis=1).max())


def precision_for(p: int, e: int, radius: int) -> int:
    """Smallest N with p^N comfortably above twice the coefficient bound."""
    target = 2 * radius * coefficient_bound(e) * 1e3 + 1
    N = 1
    while p**N <= target:
        N += 1
    return N + 2


class CyclotomicGlue:
    """Orthogonal idempotents of (Z/p^N)[y]/(Phi_e), one per p-adic factor of Phi_e."""

    def __init__(self, p: int, e: int, N: int):
        self.p, self.e, self.N, self.M = p, e, N, p**N
        self.factors = factors_mod_p(e, p)
        phibar = [c % p for c in reversed(cyclotomic_polynomial(e))]
        self.idempotents = [self._idempotent(_zz(phibar), _zz(h)) for h in self.factors]

    def _idempotent(self, phibar, h) -> CycNumber:
        p, e = self.p, self.e
        R = gf_quo(phibar, h, p, ZZ)
        s, _, g = gf_gcdex(R, h, p, ZZ)
        if [int(c) for c in g] != [1]:
            raise ArithmeticError("cyclotomic factors are not coprime")
        eps_bar = [int(c) for c in reversed(gf_rem(gf_mul(s, R, p, ZZ), phibar, p, ZZ))]
        eps = CycNumber(e, eps_bar + [0] * (phi(e) - len(eps_bar)))
        k = 1
        while k < self.N:
            k = min(2 * k, self.N)
            mod = p**k
            sq = _mod_coeffs(eps * eps, mod)
            eps = _mod_coeffs(3 * sq - 2 * _mod_coeffs(sq * eps, mod), mod)
        return eps

    def factor_index_of_power(self, base: int, u: int) -> int:
        """Index of the factor vanishing at zeta^u, zeta being a root of factor ``base``."""
        p = self.p
        h1 = _zz(self.factors[base])
        w = gf_pow_mod(_zz([1, 0]), u, h1, p, ZZ)
        hits = [i for i, h in enumerate(self.factors) if not gf_compose_mod(_zz(h), w, h1, p, ZZ)]
        if len(hits) != 1:
            raise ArithmeticError(f"zeta^{u} is a root of {len(hits)} factors")
        return hits[0]

    def glue(self, values: dict[int, int]) -> CycNumber:
        """The element congruent to values[i] modulo the i-th factor, symmetric mod p^N."""
        if set(values) != set(range(len(self.factors))):
            raise ArithmeticError("need exactly one value per factor")
        acc = CycNumber.zero(self.e)
        for i, v in values.items():
            acc = acc + self.idempotents[i] * v
        half = self.M // 2
        return CycNumber(self.e, (((c % self.M) + half) % self.M - half for c in acc.coeffs))


def _mod_coeffs(x: CycNumber, mod: int) -> CycNumber:
    return CycNumber(x.level, (c % mod for c in x.coeffs))


@lru_cache(maxsize=64)
def _glue(p: int, e: int, N: int) -> CyclotomicGlue:
    return CyclotomicGlue(p, e, N)


@lru_cache(maxsize=16)
def _gamma(p: int, N: int) -> MoritaGamma:
    return MoritaGamma(p, N)


def jacobi_sum_padic(p: int, F: int, e: int, exps: tuple[int, int, int],
                     base_factor: tuple[int, ...] | None = None) -> CycNumber:
    """Exact j(chi1, chi2, chi3) over F_{p^F}, where chi_j(g^k) = zeta_e^{exps[j] * k}.

    ``base_factor`` is the minimal polynomial over F_p of g^{(p^F-1)/e}; it
    pins which p-adic root of unity zeta_e maps to.  Without it the smallest
    factor of Phi_e mod p is used, which corresponds to some generator g.
    """
    r = p**F
    if (r - 1) % e:
        raise InputError(f"level {e} does not divide {r} - 1")
    N = precision_for(p, e, r)
    glue = _glue(p, e, N)
    gamma = _gamma(p, N)
    if base_factor is None:
        base = 0
    else:
        base = glue.factors.index(tuple(base_factor))
    values: dict[int, int] = {}
    seen: set[int] = set()
    for u in range(1, e + 1):
        if gcd(u, e) != 1 or u % e in seen:
            continue
        x = u % e
        while x not in seen:
            seen.add(x)
            x = x * p % e
        A = tuple((-u * c) % e for c in exps)
        idx = glue.factor_index_of_power(base, u)
        if idx in values:
            raise ArithmeticError("two Frobenius orbits hit the same factor")
        values[idx] = gk_conjugate_value(p, F, e, A, gamma)
    return glue.glue(values)
