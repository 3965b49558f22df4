"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--graphs 200] [--repeat 3]

Both kernel modules are called directly on the same random graphs, so the
numbers isolate the kernels from dispatch and pipeline overhead.  A second
section times a whole extraction pipeline in a subprocess with and without
``RAMSEY_WITNESS_PURE=1``.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from ramsey_witness import _kernels_py as pure
from ramsey_witness.catalog import random_connected_graph

try:
    from ramsey_witness import _kernels as compiled
except ImportError:
    compiled = None

PIPELINE = """
import random, time
from ramsey_witness import _core, run_pipeline
from ramsey_witness.catalog import random_connected_graph
rng = random.Random(3)
hosts = [random_connected_graph(rng.randint(10, 20), rng) for _ in range({count})]
t = time.perf_counter()
for g in hosts:
    for th in ("independence", "induced-matching", "matching"):
        run_pipeline(g, th, 3)
print(_core.COMPILED, time.perf_counter() - t)
"""


def workloads(graphs):
    def reach(mod):
        for adj, n, full in graphs:
            mod.reach_mask(adj, 0, full)

    def articulation(mod):
        for adj, n, full in graphs:
            mod.articulation_mask(adj, n, full)

    def clique(mod):
        for adj, n, full in graphs:
            mod.clique_search(adj, n, 0, full)

    def induced_matching(mod):
        for adj, n, full in graphs:
            if n <= 18:
                mod.max_induced_matching(adj, n, full)

    def embedding(mod):
        for adj, n, full in graphs:
            mod.induced_embedding(adj, n, [6, 5, 3], 3)  # triangle

    return {
        "reach_mask": reach,
        "articulation_mask": articulation,
        "clique_search": clique,
        "max_induced_matching": induced_matching,
        "induced_embedding": embedding,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--pipeline-hosts", type=int, default=300)
    args = ap.parse_args()

    if compiled is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1

    rng = random.Random(0)
    graphs = []
    for _ in range(args.graphs):
        g = random_connected_graph(rng.randint(8, 24), rng)
        graphs.append((list(g.adj), g.order, g.full_mask))

    print(f"{'kernel':<22}{'pure (s)':>10}{'compiled (s)':>14}{'speedup':>10}")
    for name, fn in workloads(graphs).items():
        tp = min(timeit.repeat(lambda: fn(pure), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:<22}{tp:>10.3f}{tc:>14.3f}{tp / tc:>9.1f}x")

    print()
    code = PIPELINE.format(count=args.pipeline_hosts)
    times = {}
    for label, extra in (("compiled", {}), ("pure", {"RAMSEY_WITNESS_PURE": "1"})):
        env = dict(os.environ, **extra)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        times[label] = float(out.stdout.split()[1])
    print(
        f"3 pipelines x {args.pipeline_hosts} hosts at n=3: pure {times['pure']:.2f}s, "
        f"compiled {times['compiled']:.2f}s, speedup {times['pure'] / times['compiled']:.1f}x"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
