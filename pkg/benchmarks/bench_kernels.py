"""Compare the compiled and pure-Python search kernels on representative
workloads: clique search on dense random graphs, full verification of the
heavier constructions, and cycle/path detection.

Run: python3 benchmarks/bench_kernels.py [--seed N]
"""

import argparse
import random
import time

from ramseylb import _pykernels, constructions, patterns

try:
    from ramseylb import _ckernels
except ImportError:
    _ckernels = None


def random_adj(n, p, rng):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def timed(fn, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_kernel_calls(impl, workloads):
    def run():
        out = 0
        for name, n, adj, arg in workloads:
            if name == "clique":
                out ^= impl.find_clique(n, adj, arg) is None
            elif name == "cycle":
                out ^= impl.find_cycle(n, adj, arg) is None
            elif name == "path":
                out ^= impl.find_path(n, adj, arg) is None
            else:
                out ^= impl.find_k4me(n, adj) is None
        return out

    return timed(run)


def build_workloads(seed):
    rng = random.Random(seed)
    work = []
    for _ in range(30):
        n = rng.randrange(18, 30)
        adj = random_adj(n, 0.5, rng)
        work.append(("clique", n, adj, n // 3))
        work.append(("cycle", n, adj, n - 2))
        work.append(("path", n, adj, n))
        work.append(("k4me", n, adj, 0))
    # construction-shaped loads: blue sides of the kipas colorings
    for m in (7, 11):
        c = constructions.kipas_3mod4_construction(m)
        g = c.coloring.blue
        adj = list(g.masks())
        work.append(("path", g.n, adj, 2 * m))
        work.append(("clique", g.n, adj, m + 1))
    return work


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    work = build_workloads(args.seed)
    t_py, r_py = bench_kernel_calls(_pykernels, work)
    print(f"pure-python kernels: {t_py * 1000:8.1f} ms")
    if _ckernels is None:
        print("compiled kernels unavailable; nothing to compare")
        return
    t_c, r_c = bench_kernel_calls(_ckernels, work)
    assert r_py == r_c
    print(f"compiled kernels:    {t_c * 1000:8.1f} ms")
    print(f"speedup:             {t_py / t_c:8.1f}x")

    # end-to-end: full certificate verification of one heavy construction
    c = constructions.kipas_3mod4_construction(11)

    def verify_once():
        assert patterns.find_pattern(c.coloring.red, c.red_target) is None
        assert patterns.find_pattern(c.coloring.blue, c.blue_target) is None

    t_e2e, _ = timed(verify_once)
    print(f"kipas-3mod4:11 verification (selected backend): {t_e2e * 1000:.1f} ms")


if __name__ == "__main__":
    main()
