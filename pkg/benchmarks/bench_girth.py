"""Girth kernel timings: numba loop vs level-synchronous numpy.

    python benchmarks/bench_girth.py [--repeat 3] [--threads 1]

Each row builds one construction, then times an exhaustive girth run on each
backend (the numba figure excludes the first, compiling call).
"""

import argparse
import time

from girth7.constructions import build
from girth7.verify import girth

CASES = [
    ("thm-rectfree", 3, None),
    ("thm-wq-even", 4, None),
    ("thm-even-k", 7, 6),
    ("thm-main-ii", 7, None),
    ("thm-main-i", 8, None),
    ("thm-main-i", 9, None),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    girth(build("thm-rectfree", q=3).graph, backend="numba")  # compile
    print(f"{'construction':<14}{'q':>3}{'n':>7}{'m':>8}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, q, k in CASES:
        g = build(name, q=q, k=k).graph
        t_nb, r_nb = best_of(lambda: girth(g, backend="numba", threads=args.threads), args.repeat)
        t_np, r_np = best_of(lambda: girth(g, backend="numpy"), max(1, args.repeat // 2))
        assert r_nb.length == r_np.length == 7, (r_nb, r_np)
        print(f"{name:<14}{q:>3}{g.n:>7}{g.m:>8}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
