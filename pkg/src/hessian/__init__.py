"""Exact L-functions of the curves y^2 + xy - t^d y = x^3 over F_q(t)."""

from .bsd import BsdReport, analytic_rank, bsd_product, special_value
from .curve import CurveInvariants, invariants
from .cyclo import CycNumber, CycPoly, cyclotomic_polynomial, root_of_unity
from .gf import FieldCtx, FieldElem, PrimePower, make_field, norm_to_subfield, quadratic_char
from .jacobi import Character, JacobiValue, ja, jacobi_sum3, jprime, t_m, teichmuller
from .lfun import LambdaSet, LPolynomial, functional_equation_check, l_function, p_lambda, power_sums
from .oracle import TraceSum, charsum_identity_check, trace_at, trace_sum
from .orbits import OrbitSet, decompose, gcd_tail_count, z_d

__all__ = [
    "BsdReport", "Character", "CurveInvariants", "CycNumber", "CycPoly", "FieldCtx", "FieldElem",
    "JacobiValue", "LPolynomial", "LambdaSet", "OrbitSet", "PrimePower", "TraceSum",
    "analytic_rank", "bsd_product", "charsum_identity_check", "cyclotomic_polynomial", "decompose",
    "functional_equation_check", "gcd_tail_count", "invariants", "ja", "jacobi_sum3", "jprime",
    "l_function", "make_field", "norm_to_subfield", "p_lambda", "power_sums", "quadratic_char",
    "root_of_unity", "special_value", "t_m", "teichmuller", "trace_at", "trace_sum", "z_d",
]
