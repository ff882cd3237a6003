import os
import subprocess
import sys

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from gshape import _pykernels, kernels


def backend_in_subprocess(**env):
    out = subprocess.run([sys.executable, "-c", "import gshape.kernels as k; print(k.BACKEND)"],
                         capture_output=True, text=True, env={**os.environ, **env}, check=True)
    return out.stdout.strip()


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    assert backend_in_subprocess(GSHAPE_PURE_PYTHON="1") == "python"
    if kernels.compiled_backend is not None:
        assert backend_in_subprocess(GSHAPE_PURE_PYTHON="0") == "compiled"


def brute_coprime(pids, starts, stops, bad):
    out = []
    for s, t, b in zip(starts, stops, bad):
        bs = {x for x in b if x >= 0}
        out.append(sum(1 for row in pids[s:t] if not ({x for x in row if x >= 0} & bs)))
    return out


@st.composite
def coprime_inputs(draw):
    nprimes = draw(st.integers(1, 12))
    K = draw(st.integers(1, 4))
    n = draw(st.integers(0, 25))
    rows = []
    for _ in range(n):
        ids = sorted(draw(st.sets(st.integers(0, nprimes - 1), max_size=K)))
        rows.append(ids + [-1] * (K - len(ids)))
    pids = np.array(rows, dtype=np.int32).reshape(n, K)
    npairs = draw(st.integers(1, 6))
    starts, stops, bad = [], [], []
    for _ in range(npairs):
        a = draw(st.integers(0, n))
        starts.append(a)
        stops.append(draw(st.integers(a, n)))
        ids = sorted(draw(st.sets(st.integers(0, nprimes - 1), max_size=3)))
        bad.append(ids + [-1] * (3 - len(ids)))
    return (pids, np.array(starts, dtype=np.int64), np.array(stops, dtype=np.int64),
            np.array(bad, dtype=np.int32), nprimes)


@given(coprime_inputs())
def test_coprime_kernels_agree(args):
    pids, starts, stops, bad, nprimes = args
    want = brute_coprime(pids.tolist(), starts, stops, bad.tolist())
    for mod in filter(None, (_pykernels, kernels.compiled_backend)):
        out = np.zeros(len(starts), dtype=np.int64)
        mod.count_coprime_ranges(np.ascontiguousarray(pids), starts, stops, bad, nprimes, out)
        assert out.tolist() == want
