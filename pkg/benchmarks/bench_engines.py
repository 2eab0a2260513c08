#!/usr/bin/env python3
"""Compare the compiled search core against the pure-Python fallback.

Runs a spread of representative instances on both backends, checks the
reports agree, and prints a timing table.
"""

import argparse
import time

from setfam import engines
from setfam.bounds import Params
from setfam.search import Problem, solve

INSTANCES = [
    ("hemibundled_max", Params(n=7, k=3, t=0, r=1), "brute"),
    ("hemibundled_max", Params(n=7, k=3, t=0, r=2), "brute"),
    ("hemibundled_max", Params(n=9, k=3, t=0, r=2), "shifted"),
    ("hemibundled_max", Params(n=9, k=3, t=1, r=3), "shifted"),
    ("cross_pair_max", Params(n=7, k=3, r=2), "brute"),
    ("s_union_max", Params(n=7, s=5), "clique"),
    ("s_union_conditioned_max", Params(n=7, s=5, r=1), "clique"),
    ("s_union_conditioned_max", Params(n=7, s=4, r=1), "clique"),
    ("diverse_intersecting_max", Params(n=8, k=3, r=2), "clique"),
    ("diverse_intersecting_max", Params(n=9, k=3, r=1), "clique"),
]


def fmt_params(p: Params) -> str:
    return ",".join(
        f"{k}={getattr(p, k)}" for k in ("n", "k", "t", "r", "s") if getattr(p, k) is not None
    )


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=1, help="repetitions per timing (best is kept)")
    args = ap.parse_args()

    if not engines.HAVE_COMPILED:
        print("compiled backend not built; run `pip install -e .` with Cython available")
        return 1

    header = f"{'instance':58s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    total = {"python": 0.0, "compiled": 0.0}
    for kind, params, engine in INSTANCES:
        label = f"{kind}[{engine}]({fmt_params(params)})"
        results = {}
        times = {}
        for backend in ("python", "compiled"):
            best = None
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                rep = solve(Problem(kind, params, engine), backend=backend)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            results[backend] = (rep.optimum, rep.maximizer_count, rep.nodes)
            times[backend] = best
            total[backend] += best
        if results["python"] != results["compiled"]:
            print(f"{label}: BACKEND DISAGREEMENT {results}")
            return 1
        speed = times["python"] / times["compiled"] if times["compiled"] > 0 else float("inf")
        print(f"{label:58s} {times['python']:9.3f}s {times['compiled']:9.3f}s {speed:7.1f}x")
    print("-" * len(header))
    speed = total["python"] / total["compiled"] if total["compiled"] > 0 else float("inf")
    print(f"{'total':58s} {total['python']:9.3f}s {total['compiled']:9.3f}s {speed:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
