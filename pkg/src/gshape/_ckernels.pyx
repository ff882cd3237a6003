# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; see ``gshape._pykernels`` for the reference versions."""

import numpy as np


def fiber_counts(const signed char[::1] val):
    """For each g residue, the number of (f, h) residues making (f, g, h) admissible.

    ``val[k]`` is the prime valuation class (0, 1, or 2 meaning >= 2) of residue k.
    """
    cdef Py_ssize_t n = val.shape[0]
    cdef Py_ssize_t a, b, c
    cdef long long cnt
    cdef signed char vf, vg, vh
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] o = out
    with nogil:
        for b in range(n):
            vg = val[b]
            cnt = 0
            for a in range(n):
                vf = val[a]
                for c in range(n):
                    vh = val[c]
                    if vf < 2 and vg < 2 and vh < 2 and vf + vg + vh <= 1:
                        cnt += 1
            o[b] = cnt
    return out


def count_coprime_ranges(const int[:, ::1] pids, const long long[::1] starts,
                         const long long[::1] stops, const int[:, ::1] bad,
                         int n_primes, long long[::1] out):
    """out[p] = #{i in [starts[p], stops[p]) : row pids[i] shares no id with bad[p]}.

    Rows of ``pids`` and ``bad`` are padded with -1 after their last id.
    """
    cdef Py_ssize_t npairs = starts.shape[0]
    cdef Py_ssize_t K = pids.shape[1]
    cdef Py_ssize_t KB = bad.shape[1]
    cdef Py_ssize_t p, i, j, k
    cdef int pid
    cdef long long cnt
    cdef bint ok
    mark_arr = np.zeros(n_primes + 1, dtype=np.uint8)
    cdef unsigned char[::1] mark = mark_arr
    with nogil:
        for p in range(npairs):
            for j in range(KB):
                if bad[p, j] >= 0:
                    mark[bad[p, j]] = 1
            cnt = 0
            for i in range(starts[p], stops[p]):
                ok = True
                for k in range(K):
                    pid = pids[i, k]
                    if pid < 0:
                        break
                    if mark[pid]:
                        ok = False
                        break
                if ok:
                    cnt += 1
            out[p] = cnt
            for j in range(KB):
                if bad[p, j] >= 0:
                    mark[bad[p, j]] = 0
