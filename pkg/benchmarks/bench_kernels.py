"""Compare the compiled and numpy kernels on the two hot loops.

    python benchmarks/bench_kernels.py [--x 1e7] [--q 29] [--repeat 3]
"""

import argparse
import time

from gshape import _pykernels, kernels
from gshape.arithstat import Rectangle, count_triples, local


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def with_backend(mod, fn):
    """Run fn with the module-level kernel entry points pointed at ``mod``."""
    saved = kernels.fiber_counts, kernels.count_coprime_ranges
    kernels.fiber_counts, kernels.count_coprime_ranges = mod.fiber_counts, mod.count_coprime_ranges
    try:
        return fn()
    finally:
        kernels.fiber_counts, kernels.count_coprime_ranges = saved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--x", type=float, default=1e7)
    ap.add_argument("--q", type=int, default=29, help="prime ideal norm for the local density")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if kernels.compiled_backend is not None:
        backends.insert(0, ("compiled", kernels.compiled_backend))
    else:
        print("compiled kernels unavailable; timing the fallback only")

    from gshape.gaussian import prime_ideals_up_to
    p = next(pp for pp in prime_ideals_up_to(args.q) if pp.normQ == args.q)
    val = local.valuation_classes(p)
    r = Rectangle(1, 2, 1, 2)

    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}  result")
    results = {}
    for name, mod in backends:
        t, res = best_of(lambda: int(mod.fiber_counts(val).sum()), args.repeat)
        print(f"{'local density q=' + str(args.q):<28}{name:<10}{t:>10.3f}  {res}")
        results.setdefault("local", set()).add(res)
        t, res = best_of(lambda: with_backend(mod, lambda: count_triples(r, args.x, "carefree", 1).carefree),
                         args.repeat)
        print(f"{'carefree count X=%g' % args.x:<28}{name:<10}{t:>10.3f}  {res}")
        results.setdefault("count", set()).add(res)
    agree = all(len(v) == 1 for v in results.values())
    print("backends agree" if agree else "BACKENDS DISAGREE")
    return 0 if agree else 1


if __name__ == "__main__":
    raise SystemExit(main())
