"""Analytic rank, special value at T = 1/q, and the BSD-derived |Sha|*Reg."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycNumber
from .curve import invariants
from .errors import RankMismatch, SpecialValueMismatch
from .lfun import LPolynomial, functional_equation_check, l_function


def divide_by_root(coeffs, q: int) -> list[int] | None:
    """Quotient of the integer polynomial by (1 - qT), or None if it does not divide."""
    if len(coeffs) < 2:
        return None
    out = []
    acc = 0
    for a in coeffs[:-1]:
        acc = a + q * acc
        out.append(acc)
    if coeffs[-1] + q * acc != 0:
        return None
    return out


def _rank_by_division(L: LPolynomial) -> tuple[int, list[int]]:
    coeffs, rho = list(L.coeffs), 0
    while True:
        quo = divide_by_root(coeffs, L.q)
        if quo is None:
            return rho, coeffs
        coeffs, rho = quo, rho + 1


def _in_v(L: LPolynomial, f) -> bool:
    return f.c == L.q**f.length


def analytic_rank(L: LPolynomial) -> int:
    """ord_{T=1/q} L, by exact division and by counting factors with c_m = q^{|m|}."""
    rho, _ = _rank_by_division(L)
    count = sum(1 for f in L.factors if _in_v(L, f))
    if rho != count:
        raise RankMismatch(f"division gives rank {rho}, factor count gives {count}")
    return rho


def special_value(L: LPolynomial) -> Fraction:
    """L(T)/(1-qT)^rho at T = 1/q, cross-checked against the factorwise product."""
    _, quo = _rank_by_division(L)
    D = len(quo) - 1
    by_division = Fraction(sum(a * L.q ** (D - i) for i, a in enumerate(quo)), L.q**D)

    d = L.d
    num = CycNumber.one(d)
    den = 1
    lengths = 1
    for f in L.factors:
        if _in_v(L, f):
            lengths *= f.length
        else:
            num = num * (L.q**f.length - f.c).embed(d)
            den *= L.q**f.length
    num_int = num.as_rational_integer()
    if num_int is None:
        raise SpecialValueMismatch("product over non-rank factors is not rational")
    by_product = Fraction(lengths * num_int, den)
    if by_product != by_division:
        raise SpecialValueMismatch(f"{by_division} by division, {by_product} by product")
    return by_division


@dataclass(frozen=True)
class BsdReport:
    q: int
    d: int
    degree: int
    rank: int
    special_value: Fraction
    height_exponent: int
    height_log: float
    tamagawa: int
    torsion_order: int
    sha_reg: Fraction
    bs_ratio: float
    spval_ratio: float
    fe_sign: int


def _log(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def bsd_product(q, d: int, L: LPolynomial | None = None, **kwargs) -> BsdReport:
    """Rank, L*, and |Sha|*Reg = L* * H * |tors|^2 / (tau * q), with both log ratios."""
    if L is None:
        L = l_function(q, d, **kwargs)
    inv = invariants(L.q, d)
    rho = analytic_rank(L)
    eps = functional_equation_check(L)
    if (-1) ** rho != eps:
        raise RankMismatch(f"rank {rho} has the wrong parity for sign {eps}")
    spv = special_value(L)
    H = L.q**inv.height_exponent
    sha_reg = spv * H * inv.torsion_order**2 / (inv.tamagawa * L.q)
    log_h = inv.height_exponent * math.log(L.q)
    return BsdReport(
        q=L.q, d=d, degree=L.degree, rank=rho, special_value=spv,
        height_exponent=inv.height_exponent, height_log=log_h, tamagawa=inv.tamagawa,
        torsion_order=inv.torsion_order, sha_reg=sha_reg,
        bs_ratio=_log(sha_reg) / log_h, spval_ratio=_log(spv) / log_h, fe_sign=eps,
    )
