"""Compare the numba and numpy brute-force backends.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends must return the same (size, mask); the script checks that
before timing. Numba compile time is excluded by a warm-up call.
"""

import argparse
import itertools
import time

import numpy as np

from alphaline.graph import build_graph
from alphaline.solvers import _kernels


def vertex_instance(n, p, rng):
    g = build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
    return np.array([1 << v for v in range(n)], dtype=np.int64), np.array(g.masks, dtype=np.int64)


def edge_instance(m, rng):
    n = m  # sparse: about one edge per vertex
    pairs = list(itertools.combinations(range(n), 2))
    chosen = rng.choice(len(pairs), size=m, replace=False)
    occupy = np.array([(1 << pairs[i][0]) | (1 << pairs[i][1]) for i in chosen], dtype=np.int64)
    return occupy, occupy


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    cases = [(f"MIS n={n} p=0.3", vertex_instance(n, 0.3, rng)) for n in (16, 20, 22, 24)]
    cases += [(f"matching |E|={m}", edge_instance(m, rng)) for m in (16, 20, 25)]

    _kernels.packing_max_numba(*cases[0][1])  # compile
    print(f"{'instance':<20} {'numba s':>10} {'numpy s':>10} {'ratio':>8}  result")
    for name, inst in cases:
        t_nb, r_nb = best_of(_kernels.packing_max_numba, inst, args.repeat)
        t_np, r_np = best_of(_kernels.packing_max_numpy, inst, args.repeat)
        assert r_nb == r_np, (name, r_nb, r_np)
        print(f"{name:<20} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>8.1f}  size={r_nb[0]}")


if __name__ == "__main__":
    main()
