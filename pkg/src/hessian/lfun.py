"""L(E_d/K, T) from orbit data and Jacobi sums, plus the checks it must pass."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from .cyclo import CycNumber, CycPoly
from .errors import FunctionalEquationFailure, InputError, IntegralityFailure, NotCoprime
from .gf import PrimePower, prime_power
from .jacobi import ja, jprime, t_m_sign
from .orbits import decompose, level


@dataclass(frozen=True)
class Factor:
    """One orbit's factor 1 - c * T^length; ``c`` sits at level d/gcd(d, m)."""

    m: int
    length: int
    c: CycNumber


@dataclass(frozen=True)
class LPolynomial:
    q: int
    d: int
    coeffs: tuple[int, ...]
    factors: tuple[Factor, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, T):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * T + c
        return acc


def _check_input(q, d: int) -> PrimePower:
    pp = q if isinstance(q, PrimePower) else prime_power(q)
    if d < 2:
        raise InputError(f"d must be >= 2, got {d}")
    if gcd(d, pp.q) != 1:
        raise NotCoprime(f"gcd(d={d}, q={pp.q}) != 1")
    return pp


def poly_mul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _block_coeffs(e: int, factors) -> list[int]:
    poly = CycPoly.one(e)
    for f in factors:
        poly = poly.mul_binomial(f.c, f.length)
    coeffs = poly.integer_coeffs()
    if coeffs is None:
        raise IntegralityFailure(f"level-{e} block has non-integral coefficients")
    return coeffs


def l_function(q, d: int, method: str = "auto", per_orbit: bool = False,
               cache_dir: str | None = None) -> LPolynomial:
    """L(E_d/K, T) = prod over q-orbits m of (1 - t_m(-1) Ja(m) T^{|m|}).

    Orbits are grouped by the level e = d/gcd(d, m).  By default one Jacobi
    sum per level is computed and the others are its Galois conjugates
    (Ja(u*m) = sigma_u Ja(m)); ``per_orbit`` computes every orbit directly.
    Each level block is Galois-stable, so it is reduced to integers before
    the blocks are multiplied.
    """
    pp = _check_input(q, d)
    by_level: dict[int, list] = defaultdict(list)
    for orb in decompose(d, pp.q):
        by_level[level(d, orb.rep)].append(orb)

    factors: list[Factor] = []
    coeffs = [1]
    for e in sorted(by_level):
        step = d // e
        sign = t_m_sign(d, pp, step)
        base = None if per_orbit else ja(d, pp, step, method=method, cache_dir=cache_dir).value
        block = []
        for orb in by_level[e]:
            if per_orbit:
                J = ja(d, pp, orb.rep, method=method, cache_dir=cache_dir).value
            else:
                J = base.galois(orb.rep // step)
            block.append(Factor(orb.rep, orb.length, J * sign))
        coeffs = poly_mul(coeffs, _block_coeffs(e, block))
        factors.extend(block)
    factors.sort(key=lambda f: f.m)
    return LPolynomial(q=pp.q, d=d, coeffs=tuple(coeffs), factors=tuple(factors))


def power_sums(L: LPolynomial, n_max: int) -> list[int]:
    """S_1..S_{n_max} with S_n = -sum(alpha^n) over inverse roots, via Newton's identities."""
    if n_max < 1:
        raise InputError(f"n_max must be >= 1, got {n_max}")
    a = list(L.coeffs) + [0] * max(0, n_max + 1 - len(L.coeffs))
    S: list[int] = []
    for n in range(1, n_max + 1):
        S.append(n * a[n] - sum(S[j - 1] * a[n - j] for j in range(1, n)))
    return S


def functional_equation_check(L: LPolynomial) -> int:
    """The sign eps with (qT)^deg L(1/(q^2 T)) = eps * L(T); raises if neither sign works."""
    D, q, a = L.degree, L.q, L.coeffs
    if D == 0:
        return 1
    top = a[D]
    if top not in (q**D, -(q**D)):
        raise FunctionalEquationFailure(f"leading coefficient {top} is not +-q^{D}")
    eps = 1 if top > 0 else -1
    for i in range(D + 1):
        if a[D - i] * q ** (2 * i) != eps * q**D * a[i]:
            raise FunctionalEquationFailure(f"coefficient {i} breaks the symmetry")
    return eps


def riemann_hypothesis_holds(L: LPolynomial) -> bool:
    """Every factor satisfies c * conj(c) = q^{2|m|}."""
    return all(f.c * f.c.conjugate() == L.q ** (2 * f.length) for f in L.factors)


@dataclass(frozen=True)
class LambdaSet:
    """Nonzero multiples of (1, 1, 1, -3) in (Z/d)^4."""

    d: int

    @property
    def elements(self) -> tuple[tuple[int, int, int, int], ...]:
        d = self.d
        return tuple((m, m, m, (-3 * m) % d) for m in range(1, d))

    def __len__(self):
        return self.d - 1


def p_lambda(q, d: int, method: str = "auto", cache_dir: str | None = None) -> LPolynomial:
    """P(Lambda_d, T) = prod over q-orbits A of (1 - Ja'(a) T^{|A|}), assembled at level d."""
    pp = _check_input(q, d)
    lam = LambdaSet(d)
    orbits = decompose(d, pp.q, residues=range(1, d))
    poly = CycPoly.one(d)
    factors = []
    for orb in orbits:
        a = lam.elements[orb.rep - 1]
        c = jprime(d, pp, a, method=method, cache_dir=cache_dir)
        if c.is_zero():
            continue
        factors.append(Factor(orb.rep, orb.length, c))
        poly = poly.mul_binomial(c.embed(d), orb.length)
    coeffs = poly.integer_coeffs()
    if coeffs is None:
        raise IntegralityFailure("P(Lambda_d, T) has non-integral coefficients")
    return LPolynomial(q=pp.q, d=d, coeffs=tuple(coeffs), factors=tuple(factors))
