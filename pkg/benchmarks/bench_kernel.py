"""Benchmark the compiled kernel against the pure-Python fallback.

Runs the same workload once per backend in a fresh subprocess (the backend
is fixed at import time via BASINSCOPE_DD_BACKEND) and prints a comparison
table.  The workload builds asynchronous transition systems for random
networks, detects attractors and computes the three basins per attractor —
the operations that dominate real analyses.

Usage: python3 benchmarks/bench_kernel.py [--networks N] [--vars V]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time


def workload(networks: int, n_vars: int) -> dict:
    from basinscope.attractors import attractors
    from basinscope.basins import basin_triples
    from basinscope.dd import DdManager
    from basinscope.stg import build

    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))
    from oracle import random_network

    backend = DdManager(1).backend
    rng = random.Random(99)
    start = time.monotonic()
    nodes = 0
    n_attrs = 0
    for _ in range(networks):
        net = random_network(rng, n_vars)
        ts = build(net)
        attrs = attractors(ts)
        basin_triples(ts, attrs)
        nodes += ts.manager.kernel.num_nodes()
        n_attrs += len(attrs)
    return {
        "backend": backend,
        "seconds": round(time.monotonic() - start, 3),
        "networks": networks,
        "vars": n_vars,
        "attractors": n_attrs,
        "nodes": nodes,
    }


def run_child(backend: str, networks: int, n_vars: int) -> dict:
    env = dict(os.environ, BASINSCOPE_DD_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, __file__, "--child",
         "--networks", str(networks), "--vars", str(n_vars)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--networks", type=int, default=25)
    parser.add_argument("--vars", type=int, default=16)
    parser.add_argument("--child", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.child:
        print(json.dumps(workload(args.networks, args.vars)))
        return

    results = [run_child(b, args.networks, args.vars) for b in ("py", "cy")]
    print(f"workload: {args.networks} random networks, "
          f"{args.vars} variables each (attractors + basins)")
    for r in results:
        print(f"  {r['backend']:>8}: {r['seconds']:8.3f} s "
              f"({r['nodes']} nodes, {r['attractors']} attractors)")
    if results[0]["backend"] != results[1]["backend"]:
        speedup = results[0]["seconds"] / max(results[1]["seconds"], 1e-9)
        print(f"  speedup: {speedup:.2f}x")
    else:
        print("  compiled backend unavailable; both runs used "
              + results[0]["backend"])
    if (results[0]["nodes"], results[0]["attractors"]) != \
            (results[1]["nodes"], results[1]["attractors"]):
        print("  WARNING: backends disagree on node/attractor counts")


if __name__ == "__main__":
    main()
