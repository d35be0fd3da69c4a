"""Compare the compiled kernels with the pure-Python fallback.

Times MIS enumeration, the exhaustive oracle and a full OCT-MIB run on the
same random graphs under both kernel sets and checks the outputs match.

    python benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import random
import time

from bicliques import _kernels
from bicliques.generator import GenParams, generate
from bicliques.graph import Graph
from bicliques.mis import mis_masks
from bicliques.octmib import octmib_masks
from bicliques.oracle import all_mibs


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def workloads(seed):
    rng = random.Random(seed)
    mis_graphs = [random_graph(rng, 40, 0.15) for _ in range(5)]
    oracle_graphs = [random_graph(rng, 16, 0.3) for _ in range(5)]
    oct_graphs = [generate(GenParams(18, 182, 5, seed=s)) for s in range(3)]

    def mis():
        return [list(mis_masks(g.masks, g.all_mask)) for g in mis_graphs]

    def oracle():
        return [all_mibs(g) for g in oracle_graphs]

    def octmib():
        out = []
        for g, d in oct_graphs:
            out.append(sorted(octmib_masks(g, *d.masks())))
        return out

    return {"mis (n=40)": mis, "oracle (n=16)": oracle, "octmib (n_B=200, n_O=5)": octmib}


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if not _kernels.COMPILED:
        try:
            _kernels.use("compiled")
        except ImportError:
            parser.exit(1, "compiled extension not built; run `pip install -e . --no-build-isolation`\n")
    print(f"{'workload':28s} {'compiled s':>11s} {'pure s':>9s} {'speedup':>8s}")
    for name, fn in workloads(args.seed).items():
        _kernels.use("compiled")
        fast, fast_out = best_of(fn, args.repeat)
        _kernels.use("pure")
        slow, slow_out = best_of(fn, args.repeat)
        _kernels.use("compiled")
        if fast_out != slow_out:
            raise SystemExit(f"{name}: kernel outputs differ")
        print(f"{name:28s} {fast:11.4f} {slow:9.4f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
