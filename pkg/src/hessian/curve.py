"""Closed-form invariants and local models of y^2 + xy - t^d y = x^3."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InfinityModelUnavailable, InputError, NotCoprime
from .gf import FieldCtx, FieldElem, PrimePower, prime_power

TORSION_ORDER = 3


@dataclass(frozen=True)
class ReductionRow:
    place: str
    kodaira: str
    ord_disc: int
    ord_cond: int
    c_v: int
    total_degree: int  # sum of deg v over the places in this row


@dataclass(frozen=True)
class CurveInvariants:
    q: int
    d: int
    disc_degree: int
    conductor_degree: int
    height_exponent: int
    tamagawa: int
    torsion_order: int
    reduction_table: tuple[ReductionRow, ...]


_INFINITY_ROWS = {
    0: ("I0", 0, 0, 1),
    2: ("IV", 4, 2, 3),
    1: ("IV*", 8, 2, 3),
}


def invariants(q, d: int) -> CurveInvariants:
    pp = q if isinstance(q, PrimePower) else prime_power(q)
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    if gcd(d, pp.q) != 1:
        raise NotCoprime(f"gcd(d={d}, q={pp.q}) != 1")
    kod, od, on, cv = _INFINITY_ROWS[d % 3]
    rows = (
        ReductionRow("0", f"I{3 * d}", 3 * d, 1, 3 * d, 1),
        ReductionRow("27t^d+1=0", "I1", 1, 1, 1, d),
        ReductionRow("inf", kod, od, on, cv, 1),
    )
    disc = sum(r.ord_disc * r.total_degree for r in rows)
    cond = sum(r.ord_cond * r.total_degree for r in rows)
    tam = 1
    for r in rows:
        tam *= r.c_v ** r.total_degree
    return CurveInvariants(
        q=pp.q, d=d, disc_degree=disc, conductor_degree=cond, height_exponent=disc // 12,
        tamagawa=tam, torsion_order=TORSION_ORDER, reduction_table=rows,
    )


def weierstrass_rhs(ctx: FieldCtx, d: int, tau: FieldElem | int | None = None) -> tuple[FieldElem, ...]:
    """Coefficients (x^3, x^2, x, 1) of f with y^2 = f(x) a model at t = tau.

    A finite tau uses x^3 + x^2 - 8 t^d x + 16 t^{2d}.  ``tau=None`` is the
    point at infinity, where for 3 | d the model in u = 1/t reduces at u = 0
    to x^3 + 1/4.
    """
    if tau is None:
        if d % 3:
            raise InfinityModelUnavailable(f"no good model at infinity for d = {d}")
        return (ctx(1), ctx(0), ctx(0), ctx(4).inverse())
    z = ctx(tau) ** d
    return (ctx(1), ctx(1), -8 * z, 16 * z * z)


def discriminant(ctx: FieldCtx, d: int, tau) -> FieldElem:
    """Delta(tau) = -tau^{3d} (27 tau^d + 1)."""
    z = ctx(tau) ** d
    return -(z**3) * (27 * z + 1)


def j_invariant(ctx: FieldCtx, d: int, tau) -> FieldElem:
    """j(tau) = -(24 tau^d + 1)^3 / (tau^{3d} (27 tau^d + 1)); tau must be a good place."""
    z = ctx(tau) ** d
    return -((24 * z + 1) ** 3) / (z**3 * (27 * z + 1))
