"""Pure numpy versions of the counting kernels (same signatures as ``_ckernels``)."""

import numpy as np


def fiber_counts(val):
    """For each g residue, the number of (f, h) residues making (f, g, h) admissible."""
    val = np.asarray(val, dtype=np.int8)
    n = val.shape[0]
    vf = val[:, None]
    vh = val[None, :]
    out = np.zeros(n, dtype=np.int64)
    for b in range(n):
        vg = val[b]
        ok = (vf < 2) & (vh < 2) & (vg < 2) & (vf + vh + vg <= 1)
        out[b] = int(ok.sum())
    return out


def count_coprime_ranges(pids, starts, stops, bad, n_primes, out):
    """out[p] = #{i in [starts[p], stops[p]) : row pids[i] shares no id with bad[p]}."""
    mark = np.zeros(n_primes + 1, dtype=bool)  # index -1 hits the always-False tail
    for p in range(len(starts)):
        ids = bad[p][bad[p] >= 0]
        mark[ids] = True
        rows = pids[starts[p]:stops[p]]
        out[p] = rows.shape[0] - int(mark[rows].any(axis=1).sum())
        mark[ids] = False
