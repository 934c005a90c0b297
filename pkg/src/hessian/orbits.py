"""The index set Z_d and its orbits under multiplication by q."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InputError, NotCoprime


def z_d(d: int) -> frozenset[int]:
    """Residues 1..d-1, dropping d/3 and 2d/3 when 3 divides d."""
    if d < 2:
        raise InputError(f"d must be >= 2, got {d}")
    out = set(range(1, d))
    if d % 3 == 0:
        out -= {d // 3, 2 * d // 3}
    return frozenset(out)


def multiplicative_order(q: int, n: int) -> int:
    """Order of q in (Z/n)^x; 1 for n == 1."""
    if gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    x, k = q % n, 1
    while x != 1 % n:
        x = x * q % n
        k += 1
    return k


def level(d: int, m: int) -> int:
    """Order of the residue m in Z/d, i.e. d / gcd(d, m)."""
    return d // gcd(d, m)


@dataclass(frozen=True)
class Orbit:
    rep: int
    members: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitSet:
    d: int
    q: int
    orbits: tuple[Orbit, ...]

    def __iter__(self):
        return iter(self.orbits)

    def __len__(self):
        return len(self.orbits)

    def orbit_of(self, m: int) -> Orbit:
        m %= self.d
        for o in self.orbits:
            if m in o.members:
                return o
        raise KeyError(m)


def decompose(d: int, q: int, residues=None) -> OrbitSet:
    """Split ``residues`` (default Z_d) into orbits of m -> q*m mod d.

    Orbits are listed by increasing representative, the smallest member.
    """
    if gcd(d, q) != 1:
        raise NotCoprime(f"gcd(d={d}, q={q}) != 1")
    todo = sorted(z_d(d) if residues is None else {m % d for m in residues})
    seen: set[int] = set()
    orbits = []
    for m in todo:
        if m in seen:
            continue
        members = [m]
        x = m * q % d
        while x != m:
            members.append(x)
            x = x * q % d
        seen.update(members)
        orbits.append(Orbit(rep=m, members=tuple(members)))
    return OrbitSet(d=d, q=q, orbits=tuple(orbits))


def gcd_tail_count(d: int, u: float) -> int:
    """Number of nonzero m mod d with gcd(d, m) > d**u / 3."""
    if d < 2:
        raise InputError(f"d must be >= 2, got {d}")
    bound = d**u / 3
    return sum(1 for m in range(1, d) if gcd(d, m) > bound)
