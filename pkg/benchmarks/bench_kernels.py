"""Time the numba kernels against their plain fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Compilation is triggered once before timing, so the numbers compare steady
state. Both paths are checked to agree on every case.
"""
import argparse
import time

from indcover import kernels
from indcover.exact import search_order
from indcover.generators import gen_clique, gen_forest_of_paths, gen_random_degenerate, gen_ternary_tree


def masks(g):
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def search(g, k, m, use_jit):
    edges = search_order(g)
    s = kernels.ColoringSearch(g.n, [u for u, _ in edges], [v for _, v in edges], k, m, use_jit=use_jit)
    while s.run(10**9) == kernels.PAUSED:
        pass
    return s.status, s.colouring().tobytes(), s.nodes


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


CASES = [
    ("neighbourhood T2 (13 vertices)", lambda jit: kernels.neighborhood_max(masks(gen_ternary_tree(2)), jit)),
    ("neighbourhood degenerate n=20", lambda jit: kernels.neighborhood_max(
        masks(gen_random_degenerate(20, 3, seed=1)), jit)),
    ("search K8, k=3, m=5 (infeasible)", lambda jit: search(gen_clique(8), 3, 5, jit)),
    ("search degenerate n=14, k=3, m=6", lambda jit: search(
        gen_random_degenerate(14, 3, seed=2, connected=True), 3, 6, jit)),
    ("search 3-Partition no-instance", lambda jit: search(gen_forest_of_paths((4, 4, 4, 4, 4, 6)), 2, 13, jit)),
]

# about 7M search nodes; the plain path needs tens of seconds
HEAVY = [("search K9, k=4, m=5 (infeasible)", lambda jit: search(gen_clique(9), 4, 5, jit))]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--heavy", action="store_true", help="include the multi-million node search")
    args = parser.parse_args()
    print(f"{'case':36} {'numba s':>10} {'plain s':>10} {'speedup':>9}")
    for name, fn in CASES + (HEAVY if args.heavy else []):
        fn(True)
        jit_t, jit_out = best_of(lambda: fn(True), args.repeat)
        plain_t, plain_out = best_of(lambda: fn(False), args.repeat)
        if jit_out != plain_out:
            raise SystemExit(f"{name}: paths disagree ({jit_out} vs {plain_out})")
        print(f"{name:36} {jit_t:10.4f} {plain_t:10.4f} {plain_t / max(jit_t, 1e-9):8.1f}x")


if __name__ == "__main__":
    main()
