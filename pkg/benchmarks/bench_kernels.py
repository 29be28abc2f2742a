"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--order N] [--repeat K]

Kernel timings call both implementations in-process. The end-to-end row
expands the R(4,9) generating function in a fresh interpreter per backend,
so the caches of one run cannot help the other.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qverify import _kernels_py
from qverify.eta import euler_terms

try:
    from qverify import _kernels_c
except ImportError:
    _kernels_c = None

EXPAND = ("import time; from qverify.eta import gen_lmu_regular; t = time.perf_counter(); "
          "gen_lmu_regular(4, 9, {n}); print(time.perf_counter() - t)")


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def _expand_time(n, pure):
    env = dict(os.environ, QVERIFY_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", EXPAND.format(n=n)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    n = args.order
    rng = random.Random(1)
    a = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)]
    small = a[: min(n, 600)]
    terms = euler_terms(1, n)

    cases = [
        ("mul_sparse (f1 pentagonal)", lambda k: k.mul_sparse(a, terms, n)),
        ("div_sparse (1/f1)", lambda k: k.div_sparse(a, terms, n)),
        (f"mul_dense (order {len(small)})", lambda k: k.mul_dense(small, small, len(small))),
        ("reduce_mod 8", lambda k: k.reduce_mod(a, 8)),
    ]
    print(f"{'kernel':32s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, call in cases:
        tp = _best(lambda: call(_kernels_py), args.repeat)
        if _kernels_c is None:
            print(f"{name:32s} {tp:10.4f} {'n/a':>10s}")
            continue
        tc = _best(lambda: call(_kernels_c), args.repeat)
        print(f"{name:32s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")

    tp = _expand_time(n, pure=True)
    line = f"{'R(4,9) expansion, order ' + str(n):32s} {tp:10.4f}"
    if _kernels_c is not None:
        tc = _expand_time(n, pure=False)
        line += f" {tc:10.4f} {tp / tc:7.1f}x"
    print(line)


if __name__ == "__main__":
    main()
