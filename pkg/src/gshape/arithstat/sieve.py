"""Prime-ideal sieve over a disk of Gaussian integers."""

from __future__ import annotations

import math

import numpy as np

from ..gaussian import prime_ideals_up_to


class GaussianSieve:
    """Per-point prime-ideal data for every z with ``norm(z) <= norm_max``.

    Points live on the square grid ``[-R, R]^2`` (``R = isqrt(norm_max)``); a point's
    cell index is ``(re + R) * side + (im + R)``.

    * ``pids[c]``: ids of the prime ideals dividing the point, ascending, padded with -1.
    * ``sqmax[c]``: largest norm of a prime ideal whose square divides it (0 if squarefree).
    """

    def __init__(self, norm_max: int):
        norm_max = max(int(norm_max), 2)
        self.norm_max = norm_max
        R = self.R = math.isqrt(norm_max)
        side = self.side = 2 * R + 1
        coords = np.arange(-R, R + 1, dtype=np.int64)
        self.re = np.repeat(coords, side)
        self.im = np.tile(coords, side)
        self.norm = self.re ** 2 + self.im ** 2
        self.inside = (self.norm <= norm_max) & (self.norm > 0)

        primes = prime_ideals_up_to(norm_max)
        self.primes = primes
        self.pnorm = np.array([p.normQ for p in primes], dtype=np.int64)
        # most distinct prime ideals a point can have: multiply the smallest norms
        prefix = np.cumsum(np.log(self.pnorm))
        K = max(1, int(np.searchsorted(prefix, math.log(norm_max) + 1e-9, side="right")))
        ncell = side * side
        self.pids = np.full((ncell, K), -1, dtype=np.int32)
        self.sqmax = np.zeros(ncell, dtype=np.int64)
        cnt = np.zeros(ncell, dtype=np.int64)
        for pid, p in enumerate(primes):
            q = p.normQ
            cells = self._multiples(p.generator.re, p.generator.im, norm_max // q)
            self.pids[cells, cnt[cells]] = pid
            cnt[cells] += 1
            if q * q <= norm_max:
                sq = p.generator * p.generator
                self.sqmax[self._multiples(sq.re, sq.im, norm_max // (q * q))] = q
        self.squarefree = self.inside & (self.sqmax == 0)

    def _multiples(self, a: int, b: int, zmax: int) -> np.ndarray:
        """Cells of (a+bi) z for all nonzero z with norm(z) <= zmax."""
        r = math.isqrt(zmax)
        t = np.arange(-r, r + 1, dtype=np.int64)
        x = np.repeat(t, t.size)
        y = np.tile(t, t.size)
        keep = (x * x + y * y <= zmax) & ((x != 0) | (y != 0))
        x, y = x[keep], y[keep]
        return self.cell(a * x - b * y, a * y + b * x)

    def cell(self, re, im):
        return (np.asarray(re) + self.R) * self.side + (np.asarray(im) + self.R)

    def cells_with_norm(self, lo: int, hi: int) -> np.ndarray:
        """Cells of all points with ``lo <= norm <= hi`` (and norm >= 1), sorted by (norm, re, im)."""
        lo = max(lo, 1)
        if hi > self.norm_max:
            raise ValueError("range exceeds the sieve")
        idx = np.flatnonzero((self.norm >= lo) & (self.norm <= hi))
        return idx[np.lexsort((self.im[idx], self.re[idx], self.norm[idx]))]

    def shares_prime(self, c1: np.ndarray, c2: np.ndarray, min_norm: int = 0) -> np.ndarray:
        """Rowwise: do points c1 and c2 share a prime ideal of norm > min_norm?"""
        p1, p2 = self.pids[c1], self.pids[c2]
        eq = (p1[:, :, None] == p2[:, None, :]) & (p1[:, :, None] >= 0)
        if min_norm:
            eq &= (self.pnorm[np.maximum(p1, 0)] > min_norm)[:, :, None]
        return eq.any(axis=(1, 2))
