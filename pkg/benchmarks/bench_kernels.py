"""Compare the compiled and pure-Python submodule counting kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import time

from qgrass import kernel
from qgrass.kronecker import build_DMn, build_Mn, build_Mreg
from qgrass.quiver import box
from qgrass.rep import reduce_mod

WORKLOADS = [
    ("M^3 all e, p=7", build_Mn(3), 7),
    ("DM^3 all e, p=5", build_DMn(3), 5),
    ("Mreg(0)^3 all e, p=5", build_Mreg(3, 0), 5),
    ("M^4 all e, p=5", build_Mn(4), 5),
]


def run_workload(M, p, backend):
    Mp = reduce_mod(M, p)
    return [kernel.count_submodules(Mp, e, backend=backend) for e in box(M.dims)]


def bench(repeat: int):
    rows = []
    for name, M, p in WORKLOADS:
        row = {"workload": name}
        outputs = {}
        for backend in ("python", "cython"):
            if backend == "cython" and kernel.BACKEND != "cython":
                row[backend] = None
                continue
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                outputs[backend] = run_workload(M, p, backend)
                best = min(best, time.perf_counter() - t0)
            row[backend] = best
        if len(outputs) == 2 and outputs["python"] != outputs["cython"]:
            raise SystemExit(f"backends disagree on {name}")
        if row.get("cython"):
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = bench(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'workload':<24}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for r in rows:
        cy = f"{r['cython']:.4f}" if r["cython"] is not None else "n/a"
        sp = f"{r['speedup']:.1f}x" if "speedup" in r else "-"
        print(f"{r['workload']:<24}{r['python']:>12.4f}{cy:>12}{sp:>10}")


if __name__ == "__main__":
    main()
