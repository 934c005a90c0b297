"""Finite fields F_{q^n} with a fixed generator and discrete-log tables.

Elements are encoded as integers ``code = sum(c_i * p**i)`` where ``c_i`` are
the coordinates in the power basis of the modulus.  A context holds the table
``exp[k] = code(g**k)`` and its inverse ``log``, so multiplication and
character evaluation are table lookups while addition works on coordinates.

The modulus is the lexicographically smallest monic primitive polynomial of
degree ``k*n`` over F_p (coefficients compared from x^{D-1} down to x^0), so
``x`` itself is the generator and every run reproduces the same tables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from .errors import CharacteristicTooSmall, DegreeMismatch, FieldTooLarge, InputError, NotPrime

FIELD_TABLE_LIMIT = 10**8


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"exponent k must be >= 1, got {self.k}")
        if self.p in (2, 3) or self.p < 5:
            raise CharacteristicTooSmall(f"characteristic must be >= 5, got {self.p}")
        if not isprime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p**self.k


def prime_power(q: int) -> PrimePower:
    """Parse an integer prime power ``q`` into ``PrimePower``."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, k), = f.items()
    return PrimePower(int(p), int(k))


def _zz(poly):
    return [ZZ(int(c)) for c in poly]


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    return tuple(sorted(int(l) for l in factorint(n)))


def is_primitive(poly: tuple[int, ...], p: int) -> bool:
    """True if the monic ``poly`` (coefficients high to low) is primitive over F_p."""
    D = len(poly) - 1
    if D < 1 or poly[0] != 1 or poly[-1] % p == 0:
        return False
    f = _zz(poly)
    if D > 1 and not gf_irreducible_p(f, p, ZZ):
        return False
    n = p**D - 1
    x = [ZZ(1), ZZ(0)]
    for ell in _prime_factors(n):
        if [int(c) for c in gf_pow_mod(x, n // ell, f, p, ZZ)] == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def primitive_modulus(p: int, D: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree ``D``."""
    for v in range(1, p**D):
        low = [(v // p**i) % p for i in range(D)]
        poly = (1, *reversed(low))
        if is_primitive(poly, p):
            return poly
    raise AssertionError("no primitive polynomial found")  # unreachable for prime p


def _power_codes(p: int, D: int, poly: tuple[int, ...]) -> np.ndarray:
    """Codes of x^0, x^1, ..., x^{r-2} in F_p[x]/(poly), computed blockwise."""
    n = p**D - 1
    low = list(reversed(poly[1:]))  # c_0 .. c_{D-1}
    pw = p ** np.arange(D, dtype=np.int64)
    M = np.zeros((D, D), dtype=np.int64)
    for j in range(D - 1):
        M[j + 1, j] = 1
    M[:, D - 1] = (-np.asarray(low, dtype=np.int64)) % p

    B = min(n, 4096)
    first = np.empty((B, D), dtype=np.int64)
    v = np.zeros(D, dtype=np.int64)
    v[0] = 1
    for i in range(B):
        first[i] = v
        v = M @ v % p
    codes = np.empty(n, dtype=np.int64)
    codes[:B] = first @ pw
    s = B
    while s < n:
        # columns of A are coords of x^{s+j}; A is multiplication by x^s
        A = np.empty((D, D), dtype=np.int64)
        w = v
        for j in range(D):
            A[:, j] = w
            w = M @ w % p
        take = min(B, n - s)
        codes[s : s + take] = (first[:take] @ A.T % p) @ pw
        v = A @ (M @ first[take - 1] % p) % p
        s += take
    return codes


class FieldCtx:
    """The field F_{q^n} = F_p[x]/(modulus) with generator ``x``.

    Immutable after construction; the numpy tables must not be written to.
    """

    def __init__(self, pp: PrimePower, n: int, modulus: tuple[int, ...] | None = None,
                 exp: np.ndarray | None = None):
        if n < 1:
            raise InputError(f"extension degree must be >= 1, got {n}")
        self.pp = pp
        self.ext_degree = n
        self.p = pp.p
        self.degree = pp.k * n
        self.r = pp.q**n
        if self.r > FIELD_TABLE_LIMIT:
            raise FieldTooLarge(f"field of size {self.r} exceeds table limit {FIELD_TABLE_LIMIT}")
        if modulus is None:
            modulus = primitive_modulus(self.p, self.degree)
        modulus = tuple(int(c) % self.p for c in modulus)
        if len(modulus) != self.degree + 1 or not is_primitive(modulus, self.p):
            raise InputError(f"{modulus} is not a primitive polynomial of degree {self.degree}")
        self.modulus = modulus
        if exp is None:
            exp = _power_codes(self.p, self.degree, modulus)
        self.exp = exp
        self.exp.flags.writeable = False
        log = np.full(self.r, -1, dtype=np.int64)
        log[exp] = np.arange(self.r - 1, dtype=np.int64)
        if int((log < 0).sum()) != 1:
            raise InputError("modulus does not yield a generator")
        log.flags.writeable = False
        self.log = log
        self._pw = self.p ** np.arange(self.degree, dtype=np.int64)
        self._subfields: dict[int, tuple[FieldCtx, np.ndarray]] = {}

    def __repr__(self):
        return f"FieldCtx(q={self.pp.q}, n={self.ext_degree}, modulus={self.modulus})"

    # -- element construction -------------------------------------------------

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.ctx is not self:
                raise InputError("element belongs to another field")
            return value
        return FieldElem(self, int(value) % self.p)

    def from_coords(self, coords) -> FieldElem:
        coords = list(coords) + [0] * (self.degree - len(coords))
        return FieldElem(self, sum((int(c) % self.p) * self.p**i for i, c in enumerate(coords)))

    @property
    def generator(self) -> FieldElem:
        return FieldElem(self, int(self.exp[1 % (self.r - 1)]))

    def elements(self):
        return [FieldElem(self, c) for c in range(self.r)]

    # -- vectorized code arithmetic ------------------------------------------

    @cached_property
    def digits(self) -> np.ndarray:
        dt = np.int16 if self.p < 16000 else np.int64
        codes = np.arange(self.r, dtype=np.int64)
        out = ((codes[:, None] // self._pw[None, :]) % self.p).astype(dt)
        out.flags.writeable = False
        return out

    @cached_property
    def neg_table(self) -> np.ndarray:
        if self.degree == 1:
            out = (-np.arange(self.r, dtype=np.int64)) % self.p
        else:
            out = ((-self.digits.astype(np.int64)) % self.p) @ self._pw
        out.flags.writeable = False
        return out

    @cached_property
    def lam(self) -> np.ndarray:
        """Quadratic character of every code (0 at zero)."""
        out = np.where(self.log % 2 == 0, 1, -1).astype(np.int8)
        out[0] = 0
        out.flags.writeable = False
        return out

    def add_codes(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.degree == 1:
            return (a + b) % self.p
        s = (self.digits[a].astype(np.int64) + self.digits[b]) % self.p
        return s @ self._pw

    def sub_codes(self, a, b):
        return self.add_codes(a, self.neg_table[np.asarray(b, dtype=np.int64)])

    def mul_codes(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[(self.log[a] + self.log[b]) % (self.r - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_codes(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = self.exp[(self.log[a] * (e % (self.r - 1))) % (self.r - 1)]
        return np.where(a == 0, 0, out)

    # -- towers ---------------------------------------------------------------

    def subfield(self, n_sub: int) -> FieldCtx:
        """Context for F_{q^{n_sub}} whose generator is g^((r-1)/(r'-1))."""
        return self._subfield_pair(n_sub)[0]

    def embedding(self, n_sub: int) -> np.ndarray:
        """Array mapping codes of ``subfield(n_sub)`` to codes of this field."""
        return self._subfield_pair(n_sub)[1]

    def _subfield_pair(self, n_sub):
        if n_sub < 1 or self.ext_degree % n_sub:
            raise DegreeMismatch(f"{n_sub} does not divide {self.ext_degree}")
        if n_sub == self.ext_degree:
            return self, np.arange(self.r, dtype=np.int64)
        if n_sub not in self._subfields:
            r_sub = self.pp.q**n_sub
            step = (self.r - 1) // (r_sub - 1)
            h = self.generator**step
            # min poly of h over F_p: product of its Frobenius conjugates
            poly = [self(1)]
            for j in range(self.pp.k * n_sub):
                c = h ** (self.p**j)
                poly = [b - c * a for a, b in zip(poly + [self(0)], [self(0)] + poly)]
            coeffs = []
            for a in reversed(poly):
                if a.code >= self.p:
                    raise AssertionError("minimal polynomial not over F_p")
                coeffs.append(a.code)
            sub = FieldCtx(self.pp, n_sub, modulus=tuple(coeffs))
            emb = np.zeros(r_sub, dtype=np.int64)
            emb[sub.exp] = self.exp[(np.arange(r_sub - 1, dtype=np.int64) * step) % (self.r - 1)]
            emb.flags.writeable = False
            self._subfields[n_sub] = (sub, emb)
        return self._subfields[n_sub]


@dataclass(frozen=True, eq=False)
class FieldElem:
    ctx: FieldCtx
    code: int

    @property
    def coords(self) -> tuple[int, ...]:
        p = self.ctx.p
        return tuple((self.code // p**i) % p for i in range(self.ctx.degree))

    @property
    def dlog(self) -> int | None:
        return None if self.code == 0 else int(self.ctx.log[self.code])

    def is_zero(self) -> bool:
        return self.code == 0

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise InputError("elements of different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ctx(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.ctx, int(self.ctx.add_codes(self.code, other.code)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, int(self.ctx.neg_table[self.code]))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.ctx, int(self.ctx.mul_codes(self.code, other.code)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if self.code == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return FieldElem(self.ctx, 1 if e == 0 else 0)
        n = self.ctx.r - 1
        return FieldElem(self.ctx, int(self.ctx.exp[(self.dlog * e) % n]))

    def inverse(self) -> FieldElem:
        return self ** -1

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.ctx(int(other))
        return isinstance(other, FieldElem) and other.ctx is self.ctx and other.code == self.code

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __repr__(self):
        return f"FieldElem({self.coords}, r={self.ctx.r})"


def _cache_path(cache_dir, pp: PrimePower, n: int) -> str:
    return os.path.join(cache_dir, f"gf_{pp.p}_{pp.k}_{n}.npz")


def make_field(pp: PrimePower, n: int = 1, modulus=None, cache_dir: str | None = None) -> FieldCtx:
    """Build F_{q^n}; deterministic for identical inputs.

    With ``cache_dir`` (or ``HESSIAN_CACHE``), the default-modulus tables are
    stored keyed by (p, k, n) and reloaded on later calls.
    """
    if n < 1:
        raise InputError(f"extension degree must be >= 1, got {n}")
    if pp.q**n > FIELD_TABLE_LIMIT:
        raise FieldTooLarge(f"field of size {pp.q**n} exceeds table limit {FIELD_TABLE_LIMIT}")
    cache_dir = os.environ.get("HESSIAN_CACHE", cache_dir)
    if cache_dir is None or modulus is not None:
        return _make_field_cached(pp, n, None if modulus is None else tuple(modulus))
    path = _cache_path(cache_dir, pp, n)
    if os.path.exists(path):
        with np.load(path) as data:
            return FieldCtx(pp, n, modulus=tuple(int(c) for c in data["modulus"]), exp=data["exp"].copy())
    ctx = _make_field_cached(pp, n, None)
    os.makedirs(cache_dir, exist_ok=True)
    tmp = path + ".tmp.npz"
    np.savez(tmp, modulus=np.asarray(ctx.modulus, dtype=np.int64), exp=ctx.exp)
    os.replace(tmp, path)
    return ctx


@lru_cache(maxsize=32)
def _make_field_cached(pp, n, modulus):
    return FieldCtx(pp, n, modulus=modulus)


def norm_to_subfield(ctx: FieldCtx, target_degree: int, x: FieldElem) -> FieldElem:
    """N(x) = x^((r-1)/(r'-1)) as an element of ``ctx.subfield(target_degree)``."""
    sub = ctx.subfield(target_degree)
    x = ctx(x)
    if x.is_zero():
        return sub(0)
    return FieldElem(sub, int(sub.exp[x.dlog % (sub.r - 1)]))


def quadratic_char(ctx: FieldCtx, x) -> int:
    return int(ctx.lam[ctx(x).code])
