"""Local admissibility counts modulo the square of a prime ideal."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..gaussian import GaussianInt, GaussianPrime, divides, is_prime

BUDGET_Q = 31

# residue classes of g modulo p^2
P2_DIVISIBLE = "p2-divisible"
P_EXACTLY = "p-exactly"
COPRIME = "coprime"
G_CLASSES = (P2_DIVISIBLE, P_EXACTLY, COPRIME)


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class LocalDensity:
    q: int
    admissible: int
    ambient: int

    @property
    def ratio(self) -> float:
        return self.admissible / self.ambient


def as_prime(p) -> GaussianPrime:
    if isinstance(p, GaussianPrime):
        return p
    z = GaussianInt.coerce(p)
    n = z.norm()
    if not (is_prime(n) or (z.im == 0 and is_prime(abs(z.re)) and abs(z.re) % 4 == 3)
            or (z.re == 0 and is_prime(abs(z.im)) and abs(z.im) % 4 == 3)):
        raise ValueError(f"{z} is not a Gaussian prime")
    return GaussianPrime.of(z)


def residue_system(modulus) -> list[GaussianInt]:
    """A complete residue system of Z[i] modulo ``modulus``.

    With c the content gcd(re, im), the points ``a + b i`` with ``0 <= a < N/c`` and
    ``0 <= b < c`` are pairwise incongruent and there are N of them.
    """
    d = GaussianInt.coerce(modulus)
    if not d:
        raise ValueError("modulus must be nonzero")
    c = math.gcd(d.re, d.im)
    n = d.norm() // c
    return [GaussianInt(a, b) for a in range(n) for b in range(c)]


def valuation_classes(p) -> np.ndarray:
    """For each residue mod p^2: 0 if p does not divide it, 1 if exactly, 2 if p^2 does."""
    p = as_prime(p)
    pi = p.generator
    sq = pi * pi
    return np.array([2 if divides(sq, z) else 1 if divides(pi, z) else 0
                     for z in residue_system(sq)], dtype=np.int8)


def _check_budget(q: int) -> None:
    if q > BUDGET_Q:
        raise BudgetExceeded(f"q = {q} exceeds the enumeration budget (q <= {BUDGET_Q})")


def local_density_bruteforce(p) -> LocalDensity:
    """Enumerate all residue triples mod p^2: none divisible by p^2, at most one divisible by p."""
    p = as_prime(p)
    _check_budget(p.normQ)
    fibers = kernels.fiber_counts(valuation_classes(p))
    return LocalDensity(p.normQ, int(fibers.sum()), p.normQ ** 6)


def local_density_formula(q: int) -> int:
    """``q^6 (1 - 1/q)^2 (1 + 2/q - 3/q^2)`` as an integer."""
    return (q * q - q) ** 2 * (q * q + 2 * q - 3)


def class_sizes(q: int) -> dict[str, int]:
    """Number of g residues mod p^2 in each class."""
    return {P2_DIVISIBLE: 1, P_EXACTLY: q - 1, COPRIME: q * q - q}


def fiber_count(p, g_class: str) -> int:
    """Admissible (f, h) residue pairs over one g in the given class."""
    q = as_prime(p).normQ
    if g_class == P2_DIVISIBLE:
        return 0
    if g_class == COPRIME:
        return q * (q - 1) ** 2 * (q + 2)  # q^4 (1 - 3/q^2 + 2/q^3)
    if g_class == P_EXACTLY:
        return (q * q - q) ** 2  # q^4 (1 - 1/q)^2
    raise ValueError(f"unknown class {g_class!r}; expected one of {G_CLASSES}")


def fiber_count_bruteforce(p, g_class: str) -> int:
    """Enumerated fiber size; raises if it differs between g in the same class."""
    p = as_prime(p)
    _check_budget(p.normQ)
    val = valuation_classes(p)
    target = {P2_DIVISIBLE: 2, P_EXACTLY: 1, COPRIME: 0}[g_class]
    fibers = kernels.fiber_counts(val)[val == target]
    if fibers.size != class_sizes(p.normQ)[g_class]:
        raise AssertionError("residue system has the wrong class sizes")
    if np.any(fibers != fibers[0]):
        raise AssertionError(f"fiber size is not constant on class {g_class}")
    return int(fibers[0])
