"""Compare the compiled and pure-Python finite-field kernels.

    python benchmarks/bench_kernel.py [--repeat 3] [--threads 1]
"""

from __future__ import annotations

import argparse
import time

from monozeta import ff
from monozeta.ff import _kernel_py, count_jets
from monozeta.jets import fiber_class, jet_class
from monozeta.semigroup import derive_structure

CASES = [
    # (generators, m, q, local)
    ((2, 3), 6, 11, False),
    ((4, 6, 13), 4, 7, False),
    ((4, 6, 13), 6, 5, True),
    ((4, 6, 13), 6, 7, True),
    ((8, 12, 26, 53), 5, 5, True),
]


def _time(kernel, S, m, q, local, threads, repeat) -> tuple[float, int]:
    saved = ff.count_task
    ff.count_task = kernel
    try:
        best, count = float("inf"), 0
        for _ in range(repeat):
            t0 = time.perf_counter()
            count = count_jets(S, m, q, local, threads=threads)
            best = min(best, time.perf_counter() - t0)
        return best, count
    finally:
        ff.count_task = saved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    try:
        from monozeta.ff import _kernel
    except ImportError:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'case':<32} {'count':>14} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for gens, m, q, local in CASES:
        S = derive_structure(gens)
        tc, nc = _time(_kernel.count_task, S, m, q, local, args.threads, args.repeat)
        tp, np_ = _time(_kernel_py.count_task, S, m, q, local, args.threads, 1)
        expected = (fiber_class(S, m) if local else jet_class(S, m)).eval(q)
        assert nc == np_ == expected, (gens, m, q, local)
        label = f"{','.join(map(str, gens))} m={m} q={q}{' local' if local else ''}"
        print(f"{label:<32} {nc:>14} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.0f}x")


if __name__ == "__main__":
    main()
