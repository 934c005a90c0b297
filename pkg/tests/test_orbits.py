from math import gcd, log

import pytest
from sympy import divisor_count

from hessian.errors import NotCoprime
from hessian.orbits import decompose, gcd_tail_count, multiplicative_order, z_d


def test_z_d_examples():
    assert z_d(6) == {1, 3, 5}
    assert z_d(5) == {1, 2, 3, 4}
    assert z_d(2) == {1}


@pytest.mark.parametrize("d", range(2, 60))
def test_z_d_size(d):
    assert len(z_d(d)) == (d - 3 if d % 3 == 0 else d - 1)


def test_decompose_examples():
    orbs = decompose(5, 7)
    assert [(o.rep, o.members, o.length) for o in orbs] == [(1, (1, 2, 4, 3), 4)]
    orbs = decompose(8, 7)
    assert [set(o.members) for o in orbs] == [{1, 7}, {2, 6}, {3, 5}, {4}]
    assert [o.length for o in orbs] == [2, 2, 2, 1]


@pytest.mark.parametrize("q, d", [(7, 2), (7, 3), (7, 6), (13, 12), (13, 4), (11, 10), (31, 15)])
def test_trivial_action_when_d_divides_q_minus_1(q, d):
    assert all(o.length == 1 for o in decompose(d, q))


def test_not_coprime():
    with pytest.raises(NotCoprime):
        decompose(14, 7)


@pytest.mark.parametrize("q", [7, 11, 13, 25, 49])
@pytest.mark.parametrize("d", range(2, 80))
def test_orbit_invariants(q, d):
    if gcd(d, q) != 1:
        return
    orbs = decompose(d, q)
    seen = [m for o in orbs for m in o.members]
    assert sorted(seen) == sorted(z_d(d))
    assert len(seen) == len(set(seen))
    reps = [o.rep for o in orbs]
    assert reps == sorted(reps)
    full = multiplicative_order(q, d)
    for o in orbs:
        assert o.rep == min(o.members)
        assert {q * m % d for m in o.members} == set(o.members)
        assert full % o.length == 0
        for m in o.members:
            assert o.length == multiplicative_order(q, d // gcd(d, m))


def test_gcd_tail_count_examples():
    # gcd in {3, 4, 6}
    u = log(6.6) / log(12)  # d^u / 3 = 2.2
    assert gcd_tail_count(12, u) == 5
    for d in (7, 13, 101):
        assert gcd_tail_count(d, 0.1) == d - 1
        assert gcd_tail_count(d, 0.9) == (d - 1 if d**0.9 / 3 < 1 else 0)


@pytest.mark.parametrize("u", [0.3, 0.5, 0.7])
def test_gcd_tail_bound(u):
    for d in range(2, 1001):
        assert gcd_tail_count(d, u) <= 3 * divisor_count(d) * d ** (1 - u)
