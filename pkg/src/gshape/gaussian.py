"""Exact arithmetic in the Gaussian integers Z[i].

Values are 64-bit checked: every constructed :class:`GaussianInt` whose
coordinates leave the signed 64-bit range raises :class:`OverflowError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _check(v: int) -> int:
    if v > INT64_MAX or v < INT64_MIN:
        raise OverflowError(f"integer {v} exceeds 64-bit range")
    return v


class GaussianInt:
    """An element ``re + im*i`` of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", _check(int(re)))
        object.__setattr__(self, "im", _check(int(im)))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianInt is immutable")

    @classmethod
    def coerce(cls, z) -> "GaussianInt":
        if isinstance(z, GaussianInt):
            return z
        if isinstance(z, complex):
            if z.real != int(z.real) or z.imag != int(z.imag):
                raise ValueError(f"{z!r} is not a Gaussian integer")
            return cls(int(z.real), int(z.imag))
        if isinstance(z, (int, np.integer)):
            return cls(int(z), 0)
        if isinstance(z, tuple) and len(z) == 2:
            return cls(*z)
        raise TypeError(f"cannot interpret {z!r} as a Gaussian integer")

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def __divmod__(self, other):
        """Euclidean division with the quotient rounded to the nearest lattice point."""
        o = GaussianInt.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        num = self * o.conj()
        q = GaussianInt(_round_div(num.re, n), _round_div(num.im, n))
        return q, self - q * o

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "GaussianInt":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # predicates -------------------------------------------------------
    def norm(self) -> int:
        return _check(self.re * self.re + self.im * self.im)

    def abs(self) -> float:
        return math.sqrt(self.norm())

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        try:
            o = GaussianInt.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __iter__(self) -> Iterator[int]:
        yield self.re
        yield self.im

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self):
        return format_gaussian(self)

    def to_json(self) -> dict:
        return {"im": self.im, "re": self.re}


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b for b > 0 (ties toward +infinity)."""
    return (2 * a + b) // (2 * b)


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
ONE_PLUS_I = GaussianInt(1, 1)
UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def norm(z) -> int:
    return GaussianInt.coerce(z).norm()


def divides(d, z) -> bool:
    d, z = GaussianInt.coerce(d), GaussianInt.coerce(z)
    if not d:
        return not z
    return not (z % d)


def canonical(z) -> GaussianInt:
    """The associate of ``z`` with ``re > 0`` and ``im >= 0`` (zero maps to zero)."""
    z = GaussianInt.coerce(z)
    if not z:
        return z
    for u in UNITS:
        w = z * u
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("unreachable")


def unit_part(z) -> GaussianInt:
    """The unit ``u`` with ``z = u * canonical(z)``."""
    z = GaussianInt.coerce(z)
    return z.exact_div(canonical(z))


def gcd(a, b) -> GaussianInt:
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return canonical(a)


def are_coprime(a, b) -> bool:
    return gcd(a, b).is_unit()


@dataclass(frozen=True)
class GaussianPrime:
    """A prime ideal of Z[i], given by its canonical generator."""

    generator: GaussianInt
    normQ: int

    @classmethod
    def of(cls, z) -> "GaussianPrime":
        z = canonical(z)
        return cls(z, z.norm())

    @property
    def rational_prime(self) -> int:
        return math.isqrt(self.normQ) if self.generator.im == 0 else self.normQ

    def sort_key(self):
        return (self.normQ, self.generator.re, self.generator.im)


@dataclass(frozen=True)
class Factorization:
    unit: GaussianInt
    factors: tuple[tuple[GaussianPrime, int], ...]

    def value(self) -> GaussianInt:
        z = self.unit
        for p, e in self.factors:
            z = z * p.generator ** e
        return z

    def exponents(self) -> dict[GaussianInt, int]:
        return {p.generator: e for p, e in self.factors}


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def sqrt_minus_one(p: int) -> int:
    """A square root of -1 modulo a prime p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"-1 is not a square mod {p}")
    for c in range(2, p):
        x = pow(c, (p - 1) // 4, p)
        if x * x % p == p - 1:
            return x
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def primes_over(p: int) -> tuple[GaussianInt, ...]:
    """Canonical Gaussian primes lying over the rational prime ``p``."""
    if p == 2:
        return (ONE_PLUS_I,)
    if p % 4 == 3:
        return (GaussianInt(p, 0),)
    x = sqrt_minus_one(p)
    pi = gcd(GaussianInt(p, 0), GaussianInt(x, 1))
    return tuple(sorted({canonical(pi), canonical(pi.conj())}, key=lambda z: (z.re, z.im)))


def factor(z) -> Factorization:
    """Unique factorization ``z = unit * prod(p_j ** e_j)`` with canonical primes."""
    z = GaussianInt.coerce(z)
    if not z:
        raise ValueError("cannot factor 0")
    rest = z
    factors = []
    for p in sorted(_factor_int(z.norm())):
        for pi in primes_over(p):
            e = 0
            while True:
                q, r = divmod(rest, pi)
                if r:
                    break
                rest, e = q, e + 1
            if e:
                factors.append((GaussianPrime(pi, pi.norm()), e))
    if not rest.is_unit():
        raise AssertionError(f"incomplete factorization of {z}")
    factors.sort(key=lambda pe: pe[0].sort_key())
    return Factorization(rest, tuple(factors))


def is_squarefree(z) -> bool:
    return all(e == 1 for _, e in factor(z).factors)


def count_disk(T: float) -> int:
    """Number of z in Z[i] with |z| <= T, by summing rows."""
    if T <= 0:
        raise ValueError("T must be positive")
    t2 = T * T
    a_max = math.isqrt(math.floor(t2))
    total = 0
    for a in range(-a_max, a_max + 1):
        total += 2 * math.isqrt(math.floor(t2 - a * a)) + 1
    return total


@dataclass(frozen=True)
class NormMultiplicity:
    t2: int
    count: int


def r2_table(t2_max: int) -> np.ndarray:
    """``r2[n]`` = number of z with norm(z) = n, for 0 <= n <= t2_max."""
    s = math.isqrt(t2_max)
    a = np.arange(-s, s + 1, dtype=np.int64)
    n = (a[:, None] ** 2 + a[None, :] ** 2).ravel()
    return np.bincount(n[n <= t2_max], minlength=t2_max + 1).astype(np.int64)


def norm_multiplicities(t2_max: int) -> list[NormMultiplicity]:
    if t2_max < 0:
        raise ValueError("t2_max must be nonnegative")
    return [NormMultiplicity(n, int(c)) for n, c in enumerate(r2_table(t2_max))]


def rational_primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return np.flatnonzero(sieve).tolist()


def prime_ideals_up_to(Q: int) -> list[GaussianPrime]:
    """All prime ideals of Z[i] of norm at most Q, sorted by (norm, re, im)."""
    if Q < 2:
        raise ValueError("Q must be at least 2")
    out = []
    for p in rational_primes_up_to(Q):
        if p == 2 or p % 4 == 1:
            out.extend(GaussianPrime(pi, p) for pi in primes_over(p))
        elif p * p <= Q:
            out.append(GaussianPrime(GaussianInt(p, 0), p * p))
    out.sort(key=GaussianPrime.sort_key)
    return out


def prime_ideal_norms_up_to(Q: int) -> np.ndarray:
    """Norms of all prime ideals up to Q, with multiplicity (fast, no generators)."""
    ps = np.array(rational_primes_up_to(Q), dtype=np.int64)
    if ps.size == 0:
        return ps
    split = ps[ps % 4 == 1]
    inert = ps[(ps % 4 == 3) & (ps * ps <= Q)]
    parts = [ps[ps == 2], split, split, inert * inert]
    return np.sort(np.concatenate(parts))


# literal syntax -----------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, text: str, position: int, message: str = "malformed Gaussian literal"):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (single spaces allowed around the inner sign).

    An omitted imaginary coefficient means 1, so ``i``, ``-i`` and ``1+i`` are accepted.
    """
    pos, n = 0, len(text)

    def digits(allow_empty: bool = False) -> str:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start and not (allow_empty and pos < n and text[pos] == "i"):
            raise ParseError(text, pos, "expected digit")
        return text[start:pos] or "1"

    neg = pos < n and text[pos] == "-"
    if neg:
        pos += 1
    first = int(digits(allow_empty=True)) * (-1 if neg else 1)
    if pos == n:
        return GaussianInt(first, 0)
    if text[pos] == "i" and pos + 1 == n:
        return GaussianInt(0, first)
    if text[pos] == " ":
        pos += 1
    if pos >= n or text[pos] not in "+-":
        raise ParseError(text, pos, "expected '+' or '-'")
    sign = 1 if text[pos] == "+" else -1
    pos += 1
    if pos < n and text[pos] == " ":
        pos += 1
    second = int(digits(allow_empty=True))
    if pos >= n or text[pos] != "i":
        raise ParseError(text, pos, "expected 'i'")
    pos += 1
    if pos != n:
        raise ParseError(text, pos, "trailing characters")
    return GaussianInt(first, sign * second)


def format_gaussian(z) -> str:
    z = GaussianInt.coerce(z)
    if z.im == 0:
        return str(z.re)
    b = abs(z.im)
    mag = "" if b == 1 else str(b)
    if z.re == 0:
        return f"{'-' if z.im < 0 else ''}{mag}i"
    return f"{z.re}{'+' if z.im > 0 else '-'}{mag}i"
