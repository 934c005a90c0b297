"""Brute-force checks that share no code with the Jacobi-sum pipeline.

``trace_sum`` counts points fiber by fiber: for each tau in P^1(F_{q^n}),
A(tau) = -sum_x lambda(f_tau(x)), so the result only depends on field
arithmetic and the quadratic character.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cyclo import CycNumber
from .curve import weierstrass_rhs
from .errors import BudgetExceeded, InputError
from .gf import FieldCtx, FieldElem, PrimePower, make_field, prime_power
from .jacobi import Character, jacobi_sum3

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class TraceSum:
    q: int
    d: int
    n: int
    value: int


def _horner_codes(ctx: FieldCtx, coeffs) -> np.ndarray:
    x = np.arange(ctx.r, dtype=np.int64)
    acc = np.full(ctx.r, int(coeffs[0]), dtype=np.int64)
    for c in coeffs[1:]:
        acc = ctx.add_codes(ctx.mul_codes(acc, x), int(c))
    return acc


def _lambda_sum(ctx: FieldCtx, coeffs) -> int:
    codes = tuple(c.code for c in coeffs)
    if ctx.degree == 1:
        p = ctx.p
        x = np.arange(ctx.r, dtype=np.int64)
        acc = np.full(ctx.r, codes[0], dtype=np.int64)
        for c in codes[1:]:
            acc = (acc * x + c) % p
    else:
        acc = _horner_codes(ctx, codes)
    return int(ctx.lam[acc].sum(dtype=np.int64))


def trace_at(ctx: FieldCtx, d: int, tau=None) -> int:
    """A_d(tau, r) = -sum_x lambda(f_tau(x)); ``tau=None`` is the point at infinity."""
    if tau is None and d % 3:
        return 0
    return -_lambda_sum(ctx, weierstrass_rhs(ctx, d, tau))


def _fiber_classes(ctx: FieldCtx, d: int) -> tuple[np.ndarray, int]:
    """Codes z = tau^d over tau != 0 (each hit gcd(d, r-1) times), and that multiplicity."""
    n = ctx.r - 1
    g0 = int(np.gcd(d, n))
    return ctx.exp[np.arange(0, n, g0, dtype=np.int64)], g0


def partial_trace(ctx: FieldCtx, d: int, z_codes, multiplicity: int) -> int:
    """multiplicity * sum of A over fibers with t^d = z for z in ``z_codes``."""
    total = 0
    for z in z_codes:
        total += _lambda_sum(ctx, _rhs_from_z(ctx, int(z)))
    return -multiplicity * total


def _rhs_from_z(ctx: FieldCtx, z: int):
    zz = FieldElem(ctx, z)
    return (ctx(1), ctx(1), -8 * zz, 16 * zz * zz)


def trace_sum(q, d: int, n: int, budget: int = DEFAULT_BUDGET, modulus=None,
              chunks: int = 1, cache_dir: str | None = None) -> TraceSum:
    """S_n = sum of A_d(tau, q^n) over tau in P^1(F_{q^n}).

    Refuses when q^{2n} exceeds ``budget``.  ``chunks`` splits the fibers into
    independent partial sums, which must add up to the same integer.
    """
    pp = q if isinstance(q, PrimePower) else prime_power(q)
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if pp.q ** (2 * n) > budget:
        raise BudgetExceeded(f"q^(2n) = {pp.q ** (2 * n)} exceeds budget {budget}")
    ctx = make_field(pp, n, modulus=modulus, cache_dir=None if modulus is not None else cache_dir)
    zs, mult = _fiber_classes(ctx, d)
    total = trace_at(ctx, d, 0) + trace_at(ctx, d, None)
    for part in np.array_split(zs, max(1, chunks)):
        total += partial_trace(ctx, d, part, mult)
    return TraceSum(q=pp.q, d=d, n=n, value=total)


# -- the two character-sum identities ------------------------------------------


@dataclass
class IdentityReport:
    r: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def charsum_identity_check(ctx: FieldCtx) -> IdentityReport:
    """Exhaustive check of both character-sum identities over ``ctx``.

    First: for every chi, sum_z sum_x chi(z) lambda(x^3+x^2-8zx+16z^2) is 0 for
    trivial chi and chi(-1) j(chi,chi,chi) otherwise.  Second: for every a != 0,
    sum_x lambda(x^3+a) = -lambda(a) sum over nontrivial cubic xi of
    xi(4a) j(xi,xi,xi).
    """
    r = ctx.r
    rep = IdentityReport(r=r)
    inner = np.array([_lambda_sum(ctx, _rhs_from_z(ctx, z)) for z in range(r)], dtype=np.int64)
    for c in range(r - 1):
        chi = Character(ctx, r - 1, c)
        E, c0 = chi.normalized()
        chi = Character(ctx, E, c0)
        exps = (ctx.log * c0) % E
        hist = np.zeros(E, dtype=np.int64)
        np.add.at(hist, exps[1:], inner[1:])
        if chi.is_trivial():
            hist[0] += inner[0]
        lhs = CycNumber.from_exponent_counts(E, hist)
        if chi.is_trivial():
            rhs = CycNumber.zero(E)
        else:
            rhs = jacobi_sum3(ctx, chi, chi, chi, method="direct").value * chi.sign()
        rep.checked += 1
        if lhs != rhs:
            rep.failures.append(("charsum", c))

    cubic = [Character(ctx, 3, 1), Character(ctx, 3, 2)] if (r - 1) % 3 == 0 else []
    jac = {xi.exponent: jacobi_sum3(ctx, xi, xi, xi, method="direct").value for xi in cubic}
    for a in range(1, r):
        lhs = _lambda_sum(ctx, (ctx(1), ctx(0), ctx(0), FieldElem(ctx, a)))
        acc = CycNumber.zero(3)
        four_a = ctx(4) * FieldElem(ctx, a)
        for xi in cubic:
            acc = acc + xi(four_a) * jac[xi.exponent]
        rhs = acc * (-int(ctx.lam[a]))
        rep.checked += 1
        if rhs != lhs:
            rep.failures.append(("infinity", a))
    return rep
