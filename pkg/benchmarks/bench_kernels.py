"""Timing comparison of the jit-compiled traversal kernels vs the fallback.

Runs the bichromatic-cycle scan and batched critical-path walks over
colored stacked triangulations, once with the compiled kernels and once
with AECOLOR_NO_NUMBA=1, by re-invoking itself in a subprocess per mode.

    python3 benchmarks/bench_kernels.py [--sizes 200,500,1000] [--repeats 5]
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import subprocess
import sys
import time


def build_cases(sizes):
    from aecolor import acolor, generate_apollonian

    cases = []
    for n in sizes:
        g, _ = generate_apollonian(n, seed=11)
        phi, _ = acolor(g)
        cases.append((f"apollonian n={n} m={g.m} k={phi.k}", g, phi))
    return cases


def run_inner(sizes, repeats):
    from aecolor import exists_critical_path, find_bichromatic_cycle
    from aecolor.accel import NUMBA_ENABLED

    cases = build_cases(sizes)
    results = {"numba": NUMBA_ENABLED, "ops": []}
    for label, g, phi in cases:
        find_bichromatic_cycle(g, phi)  # warm the jit cache before timing
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            witness = find_bichromatic_cycle(g, phi)
            times.append(time.perf_counter() - t0)
        assert witness is None
        results["ops"].append(
            {"op": "cycle_scan", "case": label, "seconds": statistics.median(times)}
        )

        pairs = [(a, b) for a in range(1, 9) for b in range(1, 9) if a != b]
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            hits = sum(
                exists_critical_path(g, phi, a, b, u, u + 1)
                for a, b in pairs
                for u in range(0, min(g.n - 1, 64))
            )
            times.append(time.perf_counter() - t0)
        results["ops"].append(
            {
                "op": f"critical_paths x{len(pairs) * min(g.n - 1, 64)}",
                "case": label,
                "seconds": statistics.median(times),
                "hits": hits,
            }
        )
    print(json.dumps(results))


def run_outer(sizes, repeats):
    here = os.path.abspath(__file__)
    rows = {}
    for mode, env_extra in (("numba", {}), ("fallback", {"AECOLOR_NO_NUMBA": "1"})):
        env = dict(os.environ, **env_extra)
        out = subprocess.run(
            [
                sys.executable,
                here,
                "--inner",
                "--sizes",
                ",".join(map(str, sizes)),
                "--repeats",
                str(repeats),
            ],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        payload = json.loads(out.stdout.strip().splitlines()[-1])
        if mode == "numba" and not payload["numba"]:
            print("note: numba unavailable; both columns use the fallback path")
        for op in payload["ops"]:
            rows.setdefault((op["case"], op["op"]), {})[mode] = op["seconds"]

    width = max(len(f"{c}  {o}") for c, o in rows)
    print(f"{'workload'.ljust(width)}  {'numba':>10}  {'fallback':>10}  {'speedup':>8}")
    for (case, op), times in rows.items():
        ratio = times["fallback"] / times["numba"] if times["numba"] > 0 else float("inf")
        print(
            f"{f'{case}  {op}'.ljust(width)}  {times['numba']:>9.4f}s  "
            f"{times['fallback']:>9.4f}s  {ratio:>7.1f}x"
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="200,500,1000")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    if args.inner:
        run_inner(sizes, args.repeats)
    else:
        run_outer(sizes, args.repeats)


if __name__ == "__main__":
    main()
