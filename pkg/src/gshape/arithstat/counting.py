"""Exact counts of triples (f, g, h) by height and shape.

A triple is counted when ``H(f, g, h) < X``, ``r2lo <= |g| <= r2hi`` and
``r1lo <= |f|/|h| <= r1hi``; all nonzero Gaussian integers are counted, associates
separately.  Every comparison is made on integer norms.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .. import kernels
from ..gaussian import r2_table
from .region import Rectangle, exact, f_norm_bounds, h_norm_cap
from .sieve import GaussianSieve

MODES = ("all", "carefree")


@dataclass(frozen=True)
class CountResult:
    x: Fraction
    total: int  # N': no arithmetic conditions
    carefree: Optional[int]  # N: strongly carefree triples (None unless requested)
    rectangle: Rectangle

    def to_json(self) -> dict:
        return {"carefree": self.carefree, "rectangle": self.rectangle.to_json(),
                "total": self.total, "x": float(self.x)}


def default_threads() -> int:
    env = os.environ.get("GSHAPE_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("GSHAPE_THREADS must be positive")
        return n
    return os.cpu_count() or 1


def _chunks(n: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, n)) if n else 1
    edges = np.linspace(0, n, parts + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]


def _run_chunks(fn, n: int, threads: int) -> int:
    spans = _chunks(n, threads)
    if threads <= 1 or len(spans) == 1:
        return sum(fn(a, b) for a, b in spans)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(lambda s: fn(*s), spans))


def _cumulative_r2(nmax: int) -> np.ndarray:
    """D[n] = #{z : norm(z) <= n}."""
    return np.cumsum(r2_table(max(nmax, 0)))


def _count_all(r: Rectangle, x: Fraction, threads: int) -> int:
    glo, ghi = r.g_norm_range()
    if glo > ghi:
        return 0
    r2 = r2_table(ghi)
    work = []  # (number of g of this norm, h norms, lo, hi)
    fmax = 0
    for ng in range(glo, ghi + 1):
        if not r2[ng]:
            continue
        cap = h_norm_cap(r, x, ng)
        nh = np.arange(1, cap + 1, dtype=np.int64)
        lo, hi = f_norm_bounds(r, x, ng, nh)
        keep = np.asarray(lo <= hi, dtype=bool)
        if keep.any():
            work.append((int(r2[ng]), nh[keep], lo[keep], hi[keep]))
            fmax = max(fmax, int(max(hi[keep])))
    if not work:
        return 0
    D = _cumulative_r2(fmax)
    rh = r2_table(max(int(w[1].max()) for w in work))
    parts = threads

    def chunk(a: int, b: int) -> int:
        # worker a..b takes the matching fraction of every g's h-norm range
        total = 0
        for mult, nh, lo, hi in work:
            sl = slice(a * len(nh) // parts, b * len(nh) // parts)
            lo_i = np.asarray(lo[sl], dtype=np.int64)
            hi_i = np.asarray(hi[sl], dtype=np.int64)
            band = D[hi_i] - D[lo_i - 1]
            total += mult * int(np.dot(rh[nh[sl]], band))
        return total

    return _run_chunks(chunk, parts, threads)


@dataclass
class _Pairs:
    """All admissible (g, h) cell pairs with their f-norm ranges."""
    sieve: GaussianSieve
    g: np.ndarray
    h: np.ndarray
    lo: np.ndarray
    hi: np.ndarray


def _pairs(r: Rectangle, x: Fraction, squarefree_only: bool) -> Optional[_Pairs]:
    glo, ghi = r.g_norm_range()
    if glo > ghi:
        return None
    caps = {ng: h_norm_cap(r, x, ng) for ng in range(glo, ghi + 1)}
    fmax = 0
    for ng, cap in caps.items():
        _, hi = f_norm_bounds(r, x, ng, np.arange(1, cap + 1, dtype=np.int64))
        fmax = max(fmax, int(max(hi)))
    sieve = GaussianSieve(max(fmax, ghi, max(caps.values())))
    ok = sieve.squarefree if squarefree_only else sieve.inside
    G, H, LO, HI = [], [], [], []
    for gc in sieve.cells_with_norm(glo, ghi):
        if not ok[gc]:
            continue
        ng = int(sieve.norm[gc])
        hc = sieve.cells_with_norm(1, caps[ng])
        hc = hc[ok[hc]]
        lo, hi = f_norm_bounds(r, x, ng, sieve.norm[hc])
        keep = np.asarray(lo <= hi, dtype=bool)
        hc = hc[keep]
        G.append(np.full(hc.size, gc, dtype=np.int64))
        H.append(hc)
        LO.append(np.asarray(lo[keep], dtype=np.int64))
        HI.append(np.asarray(hi[keep], dtype=np.int64))
    if not G:
        return None
    p = _Pairs(sieve, *(np.concatenate(a) for a in (G, H, LO, HI)))
    # contiguous slices of the h-annulus go to different workers
    order = np.lexsort((p.g, p.h, sieve.norm[p.h]))
    p.g, p.h, p.lo, p.hi = p.g[order], p.h[order], p.lo[order], p.hi[order]
    return p


def _count_avoiding(sieve: GaussianSieve, fcells: np.ndarray, lo, hi, bad, threads: int) -> int:
    """Sum over pairs of #{f in fcells : lo <= norm f <= hi, f shares no prime with bad row}."""
    fnorm = sieve.norm[fcells]
    fp = np.ascontiguousarray(sieve.pids[fcells], dtype=np.int32)
    starts = np.searchsorted(fnorm, lo, side="left").astype(np.int64)
    stops = np.searchsorted(fnorm, hi, side="right").astype(np.int64)
    bad = np.ascontiguousarray(bad, dtype=np.int32)
    out = np.zeros(starts.size, dtype=np.int64)
    nprimes = len(sieve.primes)

    def chunk(a: int, b: int) -> int:
        o = out[a:b]
        kernels.count_coprime_ranges(fp, starts[a:b], stops[a:b], bad[a:b], nprimes, o)
        return int(o.sum())

    return _run_chunks(chunk, starts.size, threads)


def _count_carefree(r: Rectangle, x: Fraction, threads: int) -> int:
    p = _pairs(r, x, squarefree_only=True)
    if p is None:
        return 0
    s = p.sieve
    coprime = ~s.shares_prime(p.g, p.h)
    g, h, lo, hi = p.g[coprime], p.h[coprime], p.lo[coprime], p.hi[coprime]
    fcells = s.cells_with_norm(1, int(hi.max()) if hi.size else 1)
    fcells = fcells[s.squarefree[fcells]]
    bad = np.concatenate([s.pids[g], s.pids[h]], axis=1)
    return _count_avoiding(s, fcells, lo, hi, bad, threads)


def count_triples(r: Rectangle, x, mode: str = "all", threads: Optional[int] = None) -> CountResult:
    """Count triples with ``H < x`` in the shape box; ``mode="carefree"`` also counts N."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    x = exact(x)
    if x < 1:
        raise ValueError("x must be at least 1")
    threads = default_threads() if threads is None else int(threads)
    if threads < 1:
        raise ValueError("threads must be positive")
    total = _count_all(r, x, threads)
    carefree = _count_carefree(r, x, threads) if mode == "carefree" else None
    return CountResult(x, total, carefree, r)


def tail_mass(r: Rectangle, x, y: int, threads: Optional[int] = None) -> int:
    """Triples of the region failing strong carefreeness at some prime ideal of norm > y."""
    if y < 2:
        raise ValueError("y must be at least 2")
    x = exact(x)
    threads = default_threads() if threads is None else int(threads)
    p = _pairs(r, x, squarefree_only=False)
    if p is None:
        return 0
    s = p.sieve
    big = s.pnorm > y
    fmax = int(p.hi.max())
    D = _cumulative_r2(fmax)
    band = D[p.hi] - D[p.lo - 1]
    # violations visible from (g, h) alone: a big square, or a big common prime
    pair_bad = (s.sqmax[p.g] > y) | (s.sqmax[p.h] > y) | s.shares_prime(p.g, p.h, min_norm=y)
    count = int(band[pair_bad].sum())
    g, h, lo, hi = p.g[~pair_bad], p.h[~pair_bad], p.lo[~pair_bad], p.hi[~pair_bad]
    if g.size == 0:
        return count
    # remaining f violate iff a big prime squares into f or f shares a big prime with gh
    fcells = s.cells_with_norm(1, fmax)
    fcells = fcells[s.sqmax[fcells] <= y]
    ids = np.concatenate([s.pids[g], s.pids[h]], axis=1)
    ids = np.where((ids >= 0) & big[np.maximum(ids, 0)], ids, -1)
    clean = _count_avoiding(s, fcells, lo, hi, ids, threads)
    return count + int(band[~pair_bad].sum()) - clean


def prime_ideal_tail_sum(y: int, cutoff: int = 10 ** 6) -> float:
    """``sum_{N(p) > y} N(p)^-2`` over prime ideals, summed to ``cutoff`` plus a bound for the rest."""
    from ..gaussian import prime_ideal_norms_up_to

    q = prime_ideal_norms_up_to(max(cutoff, y + 1)).astype(float)
    return math.fsum((1.0 / q[q > y] ** 2).tolist()) + 2.0 / max(cutoff, y + 1)


def tail_constant(r: Rectangle, x, y: int, threads: Optional[int] = None) -> float:
    """Fitted C in ``tail_mass / x <= C sum_{q > y} q^-2``."""
    return tail_mass(r, x, y, threads) / float(exact(x)) / prime_ideal_tail_sum(y)
