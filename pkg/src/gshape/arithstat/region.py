"""Shape rectangles, heights and exact integer bounds for the counting problem."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..gaussian import GaussianInt, are_coprime, is_squarefree


def exact(x) -> Fraction:
    """Exact rational value of a user-supplied real; floats are read through their repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"not a finite number: {x}")
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class Rectangle:
    """The shape box ``[r1lo, r1hi] x [r2lo, r2hi]`` for (|f|/|h|, |g|)."""

    r1lo: Fraction
    r1hi: Fraction
    r2lo: Fraction
    r2hi: Fraction

    def __post_init__(self):
        for name in ("r1lo", "r1hi", "r2lo", "r2hi"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if not (0 < self.r1lo < self.r1hi and 0 < self.r2lo < self.r2hi):
            raise ValueError("need 0 < r1lo < r1hi and 0 < r2lo < r2hi")

    @classmethod
    def of(cls, r1lo, r1hi, r2lo, r2hi) -> "Rectangle":
        return cls(r1lo, r1hi, r2lo, r2hi)

    def g_norm_range(self) -> tuple[int, int]:
        """Integer norms n with r2lo^2 <= n <= r2hi^2."""
        lo = max(1, math.ceil(self.r2lo ** 2))
        return lo, math.floor(self.r2hi ** 2)

    def contains(self, other: "Rectangle") -> bool:
        return (self.r1lo <= other.r1lo and other.r1hi <= self.r1hi
                and self.r2lo <= other.r2lo and other.r2hi <= self.r2hi)

    def to_json(self) -> dict:
        return {k: float(getattr(self, k)) for k in ("r1hi", "r1lo", "r2hi", "r2lo")}


def height(f, g, h) -> float:
    """``|f| |g|^2 |h|^3``."""
    nf, ng, nh = (GaussianInt.coerce(z).norm() for z in (f, g, h))
    if not (nf and ng and nh):
        raise ValueError("height needs f, g, h nonzero")
    return math.sqrt(nf) * ng * nh * math.sqrt(nh)


def height_below(f, g, h, x) -> bool:
    """``H(f, g, h) < x`` decided on integers."""
    x = exact(x)
    nf, ng, nh = (GaussianInt.coerce(z).norm() for z in (f, g, h))
    return nf * ng * ng * nh ** 3 * x.denominator ** 2 < x.numerator ** 2


def is_strongly_carefree(f, g, h) -> bool:
    f, g, h = (GaussianInt.coerce(z) for z in (f, g, h))
    if not (f and g and h):
        raise ValueError("f, g, h must be nonzero")
    return (is_squarefree(f) and is_squarefree(g) and is_squarefree(h)
            and are_coprime(f, g) and are_coprime(f, h) and are_coprime(g, h))


def _ints(values, big: bool) -> np.ndarray:
    return np.array(values, dtype=object) if big else np.asarray(values, dtype=np.int64)


def f_norm_bounds(r: Rectangle, x: Fraction, ng: int, nh) -> tuple[np.ndarray, np.ndarray]:
    """Inclusive integer range ``[lo, hi]`` for norm(f), given norm(g) and an array of norm(h).

    ``lo = ceil(r1lo^2 nh)``, and ``hi`` is the smaller of ``floor(r1hi^2 nh)`` and the
    largest n with ``n ng^2 nh^3 < x^2``.  Entries with ``lo > hi`` are empty.
    """
    nh = np.asarray(nh)
    a, b = r.r1lo.numerator ** 2, r.r1lo.denominator ** 2
    c, d = r.r1hi.numerator ** 2, r.r1hi.denominator ** 2
    P, Q = x.numerator ** 2, x.denominator ** 2
    top = int(nh.max()) if nh.size else 0
    big = max(P, ng * ng * top ** 3 * Q, c * top, a * top) >= 2 ** 62
    n = _ints(nh.tolist(), big) if big else nh.astype(np.int64)
    lo = -((-a * n) // b)
    hi = np.minimum((c * n) // d, (P - 1) // (ng * ng * n ** 3 * Q))
    return lo, hi


def h_norm_cap(r: Rectangle, x: Fraction, ng: int) -> int:
    """A safe upper bound for norm(h): beyond it the f-range is empty."""
    # need r1lo^2 nh * ng^2 nh^3 < x^2
    return math.isqrt(math.floor(x / (r.r1lo * ng))) + 2
