"""Finite fields GF(q) and GF(q^m) with elements encoded as integers.

An element of a field of order ``Q**m`` built over a base field of order ``Q``
is the integer ``sum(c_i * Q**i)``, where ``c_0, ..., c_{m-1}`` are its
coordinates over the base (the coefficients of its polynomial representative,
constant term first).  Base-field elements therefore embed as the integers
``0 .. Q-1`` unchanged.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

MAX_ORDER = 1 << 18
TABLE_ORDER = 16


class FieldError(ValueError):
    pass


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(r, e)`` with ``q == r**e`` and ``r`` prime, or raise."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    r = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % r == 0:
        rest //= r
        e += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return r, e


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def multiplicative_order(q: int, p: int) -> int:
    """Smallest ``m >= 1`` with ``q**m == 1 (mod p)``."""
    if q % p == 0:
        raise FieldError(f"{p} divides {q}")
    m, x = 1, q % p
    while x != 1:
        x = x * q % p
        m += 1
    return m


class GF:
    """A finite field, either prime or a simple extension of another GF.

    Use :func:`make_field` and :func:`make_extension` rather than the
    constructor; they pick the modulus deterministically.
    """

    def __init__(self, base: GF | None, modulus: tuple[int, ...] | None = None, *, prime: int | None = None):
        if base is None:
            if prime is None or not is_prime(prime):
                raise FieldError(f"{prime} is not prime")
            self.base = None
            self.characteristic = prime
            self.degree = 1
            self.modulus = (0, 1)
            self.order = prime
        else:
            self.base = base
            self.characteristic = base.characteristic
            self.modulus = tuple(modulus)
            self.degree = len(self.modulus) - 1
            if self.modulus[-1] != 1:
                raise FieldError("modulus must be monic")
            if not base.is_irreducible(self.modulus):
                raise FieldError(f"modulus {self.modulus} is reducible over GF({base.order})")
            self.order = base.order ** self.degree
        if self.order > MAX_ORDER:
            raise FieldError(f"field order {self.order} exceeds {MAX_ORDER}")

    def __repr__(self):
        if self.base is None:
            return f"GF({self.order})"
        return f"GF({self.order}) = GF({self.base.order})[u]/{self.modulus}"

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.order == other.order
            and self.modulus == other.modulus
            and self.base == other.base
        )

    def __hash__(self):
        return hash((self.order, self.modulus, self.base))

    @property
    def prime_field(self) -> GF:
        f = self
        while f.base is not None:
            f = f.base
        return f

    # --- coordinates -----------------------------------------------------

    def coords(self, a: int) -> list[int]:
        """Coordinates of ``a`` over the base field, constant term first."""
        Q = self.base.order if self.base is not None else self.order
        out = []
        for _ in range(self.degree):
            a, c = divmod(a, Q)
            out.append(c)
        return out

    def from_coords(self, cs) -> int:
        Q = self.base.order if self.base is not None else self.order
        a = 0
        for c in reversed(list(cs)):
            a = a * Q + c
        return a

    def in_base(self, a: int) -> bool:
        """True iff ``a`` lies in the embedded base field."""
        return self.base is not None and a < self.base.order

    # --- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.order
        if self._tables is not None:
            return int(self._tables[0][a, b])
        B = self.base
        return self.from_coords(B.add(x, y) for x, y in zip(self.coords(a), self.coords(b)))

    def neg(self, a: int) -> int:
        if self.base is None:
            return -a % self.order
        return self.from_coords(self.base.neg(x) for x in self.coords(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.base is None:
            return a * b % self.order
        if self._tables is not None:
            return int(self._tables[1][a, b])
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        B = self.base
        prod = _poly_mul_raw(B, self.coords(a), self.coords(b))
        _, rem = _poly_divmod_raw(B, prod, list(self.modulus))
        rem = rem + [0] * (self.degree - len(rem))
        return self.from_coords(rem)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    @cached_property
    def _tables(self):
        # add/mul lookup tables for small extension fields; None means compute on demand
        if self.base is None or self.order > TABLE_ORDER:
            return None
        n = self.order
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        B = self.base
        cs = [self.coords(a) for a in range(n)]
        for a in range(n):
            for b in range(a, n):
                s = self.from_coords(B.add(x, y) for x, y in zip(cs[a], cs[b]))
                m = self._mul_slow(a, b)
                add[a, b] = add[b, a] = s
                mul[a, b] = mul[b, a] = m
        return add, mul

    @cached_property
    def add_table(self) -> np.ndarray:
        """Full addition table as an ``order x order`` array (small fields only)."""
        if self.base is None:
            r = np.arange(self.order)
            return (r[:, None] + r[None, :]) % self.order
        if self._tables is None:
            raise FieldError(f"no lookup tables for GF({self.order})")
        return self._tables[0]

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.base is None:
            r = np.arange(self.order)
            return (r[:, None] * r[None, :]) % self.order
        if self._tables is None:
            raise FieldError(f"no lookup tables for GF({self.order})")
        return self._tables[1]

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.order)], dtype=np.int64)

    # --- structure -------------------------------------------------------

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    @cached_property
    def primitive_element(self) -> int:
        """Least element (in integer encoding) generating the multiplicative group."""
        n = self.order - 1
        rs = prime_factors(n)
        for g in range(1, self.order):
            if all(self.pow(g, n // r) != 1 for r in rs):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    def is_irreducible(self, poly) -> bool:
        """Trial division by every monic polynomial of degree 1 .. deg/2."""
        poly = _trim(list(poly))
        d = len(poly) - 1
        if d < 1:
            return False
        for k in range(1, d // 2 + 1):
            for low in itertools.product(range(self.order), repeat=k):
                divisor = list(low) + [1]
                _, rem = _poly_divmod_raw(self, poly, divisor)
                if not rem:
                    return False
        return True


# --- raw polynomial helpers (coefficient lists over a field) -------------


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mul_raw(F: GF, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def _poly_divmod_raw(F: GF, a, b) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lead = F.inv(b[-1])
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, y))
        _trim(a)
    return _trim(quot), a


# --- construction --------------------------------------------------------


def smallest_irreducible(base: GF, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``m`` (low-to-high)."""
    for low in itertools.product(range(base.order), repeat=m):
        poly = low + (1,)
        if low[0] != 0 and base.is_irreducible(poly):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def make_field(q: int) -> GF:
    """GF(q) for a prime power ``q <= 16``."""
    r, e = factor_prime_power(q)
    if q > 16:
        raise FieldError(f"base fields are limited to order <= 16, got {q}")
    prime = GF(None, prime=r)
    if e == 1:
        return prime
    return GF(prime, smallest_irreducible(prime, e))


@lru_cache(maxsize=None)
def make_extension(base: GF, m: int) -> GF:
    """GF(base.order ** m) as a degree-``m`` extension of ``base``."""
    if m < 1:
        raise FieldError("extension degree must be positive")
    if m == 1:
        return base
    if base.order ** m > MAX_ORDER:
        raise FieldError(f"GF({base.order}^{m}) exceeds the size bound {MAX_ORDER}")
    return GF(base, smallest_irreducible(base, m))


def pth_root_of_unity(F: GF, p: int) -> int:
    """A primitive ``p``-th root of unity: ``g**((|F|-1)/p)`` for the least primitive ``g``."""
    if p < 3 or not is_prime(p):
        raise FieldError(f"{p} is not an odd prime")
    if (F.order - 1) % p:
        raise FieldError(f"{p} does not divide |GF({F.order})| - 1")
    return F.pow(F.primitive_element, (F.order - 1) // p)


class Poly:
    """Univariate polynomial over a :class:`GF`, coefficients constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs):
        self.field = field
        self.coeffs = tuple(_trim(list(coeffs)))

    @classmethod
    def x_power_minus_one(cls, field: GF, n: int) -> Poly:
        return cls(field, [field.neg(1)] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)} over GF({self.field.order}))"

    def _check(self, other):
        if self.field != other.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Poly(F, [F.add(x, y) for x, y in zip(a, b)])

    def __mul__(self, other):
        self._check(other)
        return Poly(self.field, _poly_mul_raw(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        self._check(other)
        q, r = _poly_divmod_raw(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, q), Poly(self.field, r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def poly_eval(a: Poly, x: int) -> int:
    return a(x)
