"""Limit densities: Euler product, g-sum and the comparison report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..gaussian import GaussianInt, factor, prime_ideal_norms_up_to, r2_table
from .counting import count_triples
from .region import Rectangle, exact

DEFAULT_QMAX = 10 ** 5


def euler_product_with_tail(q_max: int) -> tuple[float, float]:
    """``prod (1 - 3/q^2 + 2/q^3)`` over prime ideals of norm <= q_max, and a bound on |log tail|.

    The log of each omitted factor is at most ``3/q^2 / (1 - 3/q^2)`` and at most two ideals
    share a norm, so the tail is bounded by ``6/q_max`` times ``1/(1 - 3/(q_max+1)^2)``.
    """
    if q_max < 2:
        raise ValueError("q_max must be at least 2")
    q = prime_ideal_norms_up_to(q_max).astype(float)
    logs = np.log1p(-3 / q ** 2 + 2 / q ** 3)
    value = math.exp(math.fsum(logs.tolist()))
    tail = 6 / q_max / (1 - 3 / (q_max + 1) ** 2)
    return value, tail


def euler_product(q_max: int) -> float:
    return euler_product_with_tail(q_max)[0]


def _annulus(lo, hi) -> list[GaussianInt]:
    lo, hi = exact(lo), exact(hi)
    if not 0 < lo < hi:
        raise ValueError("need 0 < r2lo < r2hi")
    nlo, nhi = max(1, math.ceil(lo * lo)), math.floor(hi * hi)
    R = math.isqrt(max(nhi, 0))
    return [GaussianInt(a, b) for a in range(-R, R + 1) for b in range(-R, R + 1)
            if nlo <= a * a + b * b <= nhi]


def g_sum_terms(r2lo, r2hi) -> tuple[float, int]:
    """``sum alpha(g)`` over squarefree g with |g| in range, and the number of such g."""
    terms = []
    for g in _annulus(r2lo, r2hi):
        fac = factor(g)
        if any(e > 1 for _, e in fac.factors):
            continue
        w = 1.0 / g.norm()
        for p, _ in fac.factors:
            w *= p.normQ / (p.normQ + 2)
        terms.append(w)
    return math.fsum(terms), len(terms)


def g_sum(r2lo, r2hi) -> float:
    return g_sum_terms(r2lo, r2hi)[0]


def theoretical_density_all(r: Rectangle) -> float:
    """``pi^2 (r1hi - r1lo) sum_v N_v / v^2`` over representable norms v^2 in the g-band."""
    lo, hi = r.g_norm_range()
    if lo > hi:
        return 0.0
    r2 = r2_table(hi)
    s = math.fsum(int(r2[n]) / n for n in range(lo, hi + 1))
    return math.pi ** 2 * float(r.r1hi - r.r1lo) * s


def theoretical_density_carefree(r: Rectangle, q_max: int = DEFAULT_QMAX) -> float:
    gs, _ = g_sum_terms(r.r2lo, r.r2hi)
    return math.pi ** 2 * float(r.r1hi - r.r1lo) * gs * euler_product(q_max)


@dataclass(frozen=True)
class DensityReport:
    x: float
    count: int
    empirical: float
    theoretical: float
    relative_error: float
    residual_x14: float  # |N/X - limit| X^(1/4)
    euler_truncation: int
    euler_log_tail_bound: float
    g_terms: int
    rectangle: Rectangle = field(repr=False)

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "empirical": self.empirical,
            "euler_log_tail_bound": self.euler_log_tail_bound,
            "euler_truncation": self.euler_truncation,
            "g_terms": self.g_terms,
            "rectangle": self.rectangle.to_json(),
            "relative_error": self.relative_error,
            "residual_x14": self.residual_x14,
            "theoretical": self.theoretical,
            "x": self.x,
        }


def density_report(r: Rectangle, x, q_max: int = DEFAULT_QMAX,
                   threads: Optional[int] = None) -> DensityReport:
    xv = float(exact(x))
    n = count_triples(r, x, "carefree", threads).carefree
    gs, g_terms = g_sum_terms(r.r2lo, r.r2hi)
    ep, tail = euler_product_with_tail(q_max)
    theo = math.pi ** 2 * float(r.r1hi - r.r1lo) * gs * ep
    emp = n / xv
    rel = abs(emp - theo) / theo if theo > 0 else math.inf
    return DensityReport(xv, n, emp, theo, rel, abs(emp - theo) * xv ** 0.25,
                         q_max, tail, g_terms, r)
