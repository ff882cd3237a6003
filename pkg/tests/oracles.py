"""Slow, independent reference implementations used only by the tests."""

import math
from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache

import sympy

from gshape.bases import AlphaPoly, GaussianRational


def disk(nmax):
    """All nonzero (a, b, norm) with norm <= nmax, sorted by norm."""
    r = math.isqrt(nmax)
    pts = [(a, b, a * a + b * b) for a in range(-r, r + 1) for b in range(-r, r + 1)
           if 0 < a * a + b * b <= nmax]
    pts.sort(key=lambda p: p[2])
    return pts


def gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gdivides(d, z):
    n = d[0] ** 2 + d[1] ** 2
    re = z[0] * d[0] + z[1] * d[1]
    im = z[1] * d[0] - z[0] * d[1]
    return re % n == 0 and im % n == 0


@lru_cache(maxsize=None)
def prime_divisors(a, b):
    """Canonical Gaussian primes dividing a+bi, and whether it is squarefree, by trial division."""
    n = a * a + b * b
    out, sqfree = [], True
    for p in sympy.primefactors(n):
        if p % 4 == 3:
            cands = [(p, 0)]
        else:
            x = next(x for x in range(1, math.isqrt(p) + 1) if math.isqrt(p - x * x) ** 2 == p - x * x)
            y = math.isqrt(p - x * x)
            cands = [(x, y)] if p == 2 else [(x, y), (y, x)]
        for c in cands:
            if gdivides(c, (a, b)):
                out.append(c)
                if gdivides(gmul(c, c), (a, b)):
                    sqfree = False
    return frozenset(out), sqfree


def carefree(f, g, h):
    (pf, sf), (pg, sg), (ph, sh) = (prime_divisors(*z[:2]) for z in (f, g, h))
    return sf and sg and sh and not (pf & pg) and not (pf & ph) and not (pg & ph)


def naive_triples(r1lo, r1hi, r2lo, r2hi, x):
    """Every (f, g, h) with H < x in the shape box, by looping over all three with exact tests."""
    r1lo, r1hi, r2lo, r2hi, x = (Fraction(repr(v)) if isinstance(v, float) else Fraction(v)
                                 for v in (r1lo, r1hi, r2lo, r2hi, x))
    X2 = x * x
    hmax = math.floor(x / r1lo) + 1  # N(h)^2 <= N(f) N(h)^3 / r1lo^2 < X^2 / r1lo^2
    pts = disk(math.floor(max(r2hi ** 2, r1hi ** 2 * hmax, hmax)))
    norms = [p[2] for p in pts]
    for g in pts:
        if not (r2lo ** 2 <= g[2] <= r2hi ** 2):
            continue
        for h in pts[:bisect_right(norms, hmax)]:
            if g[2] ** 2 * h[2] ** 3 >= X2:
                break
            for f in pts[:bisect_right(norms, math.floor(r1hi ** 2 * h[2]))]:
                if f[2] * g[2] ** 2 * h[2] ** 3 >= X2:
                    break
                if f[2] >= r1lo ** 2 * h[2]:
                    yield f, g, h


def naive_count(r1lo, r1hi, r2lo, r2hi, x):
    """(N', N)."""
    total = cf = 0
    for f, g, h in naive_triples(r1lo, r1hi, r2lo, r2hi, x):
        total += 1
        cf += carefree(f, g, h)
    return total, cf


def violates_above(f, g, h, y):
    """Does some prime of norm > y divide two coordinates, or one coordinate twice?"""
    ps = [prime_divisors(*z[:2])[0] for z in (f, g, h)]
    for p in ps[0] | ps[1] | ps[2]:
        if p[0] ** 2 + p[1] ** 2 <= y:
            continue
        hits = [z for z, s in zip((f, g, h), ps) if p in s]
        if len(hits) > 1 or gdivides(gmul(p, p), hits[0][:2]):
            return True
    return False


def naive_tail(r1lo, r1hi, r2lo, r2hi, x, y):
    return sum(violates_above(f, g, h, y) for f, g, h in naive_triples(r1lo, r1hi, r2lo, r2hi, x))


def multiplication_matrix(e: AlphaPoly, m):
    """Rational 8x8 matrix of z -> e z on the Q-basis (1, a, a^2, a^3, i, i a, i a^2, i a^3)."""
    cols = []
    for k in range(8):
        c = [GaussianRational(0)] * 4
        c[k % 4] = GaussianRational(1) if k < 4 else GaussianRational(0, 1)
        prod = e.mul(AlphaPoly(tuple(c)), m)
        cols.append([co.real for co in prod.coeffs] + [co.imag for co in prod.coeffs])
    return sympy.Matrix(8, 8, lambda r, c: sympy.Rational(cols[c][r].numerator, cols[c][r].denominator))


def is_integral_exact(e: AlphaPoly, m) -> bool:
    """Algebraic integer iff the characteristic polynomial of multiplication has integer coefficients."""
    poly = multiplication_matrix(e, m).charpoly()
    return all(sympy.Rational(c).q == 1 for c in poly.all_coeffs())
