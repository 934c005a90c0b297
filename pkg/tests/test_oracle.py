from itertools import product
import pytest

from hessian.errors import BudgetExceeded, InputError
from hessian.gf import PrimePower, is_primitive, make_field, primitive_modulus
from hessian.oracle import charsum_identity_check, trace_at, trace_sum

from naive import jacobi_lambda3, legendre, trace_naive


def test_infinity_contributes_nothing_unless_three_divides_d():
    F = make_field(PrimePower(7), 1)
    for d in (2, 4, 5, 7):
        assert trace_at(F, d, None) == 0
    inv4 = pow(4, 5, 7)
    assert trace_at(F, 6, None) == -sum(legendre(x**3 + inv4, 7) for x in range(7))


@pytest.mark.parametrize("p", [7, 11, 13])
def test_trace_at_zero(p):
    F = make_field(PrimePower(p), 1)
    assert trace_at(F, 3, 0) == trace_naive(p, 3, 0) == -sum(legendre(x**3 + x**2, p) for x in range(p))


@pytest.mark.parametrize("p, n", [(7, 1), (7, 2), (11, 2), (5, 3)])
def test_hasse_bound_at_good_fibers(p, n):
    F = make_field(PrimePower(p), n)
    for tau in range(1, F.r):
        A = trace_at(F, 5, tau)
        assert A * A <= 4 * F.r


@pytest.mark.parametrize("p", [7, 11, 13, 17])
def test_d2_first_sum_is_the_linear_coefficient(p):
    assert trace_sum(p, 2, 1).value == -legendre(-1, p) * jacobi_lambda3(p)


def test_d5_first_sums_vanish():
    S = [trace_sum(7, 5, n).value for n in range(1, 5)]
    assert S[:3] == [0, 0, 0]
    assert S[3] == -4 * 2401


def test_prime_field_matches_naive():
    for p, d in product((7, 11, 13), (2, 4, 5)):
        ref = sum(trace_naive(p, d, tau) for tau in range(p))
        assert trace_sum(p, d, 1).value == ref


def _other_primitive(p, n):
    default = primitive_modulus(p, n)
    for tail in product(range(p), repeat=n):
        cand = (1,) + tail[::-1]
        if cand != default and is_primitive(cand, p):
            return cand
    raise AssertionError


@pytest.mark.parametrize("q, d, n", [(7, 4, 2), (7, 6, 2), (5, 7, 3)])
def test_independent_of_modulus(q, d, n):
    alt = _other_primitive(PrimePower(q).p, n)
    assert trace_sum(q, d, n, modulus=alt).value == trace_sum(q, d, n).value


@pytest.mark.parametrize("chunks", [2, 3, 7, 1000])
def test_chunked_sum_merges(chunks):
    assert trace_sum(7, 8, 2, chunks=chunks).value == trace_sum(7, 8, 2).value


def test_budget():
    with pytest.raises(BudgetExceeded):
        trace_sum(7, 4, 3, budget=10**5)
    assert trace_sum(7, 4, 3, budget=7**6).n == 3
    with pytest.raises(InputError):
        trace_sum(7, 4, 0)


@pytest.mark.parametrize("p, n", [(7, 1), (11, 1), (13, 1), (5, 2), (7, 2)])
def test_identities_hold(p, n):
    rep = charsum_identity_check(make_field(PrimePower(p), n))
    assert rep.ok, rep.failures
    assert rep.checked == 2 * (rep.r - 1)


def test_identity_count_r7():
    assert charsum_identity_check(make_field(PrimePower(7), 1)).checked == 12


def test_r11_has_no_cubic_characters():
    # 3 does not divide 10, so x -> x^3 is a bijection and every sum vanishes
    for a in range(1, 11):
        assert sum(legendre(x**3 + a, 11) for x in range(11)) == 0
    assert charsum_identity_check(make_field(PrimePower(11), 1)).ok


def test_trivial_character_sum_is_zero():
    p = 13
    total = sum(legendre(x**3 + x**2 - 8 * z * x + 16 * z * z, p) for z in range(p) for x in range(p))
    assert total == 0
