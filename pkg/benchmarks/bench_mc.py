#!/usr/bin/env python3
"""Benchmark the Monte Carlo membership kernels: numba vs pure numpy.

Runs the same volume estimates through both backends, checks the hit counts
agree bit-for-bit, and reports throughput. The numba timing excludes JIT
compilation (a warm-up call runs first).
"""

import argparse
import time

from fitsgeo import (
    OUTER,
    VOID,
    Box,
    Cell,
    Model,
    Rcc,
    SenseRef,
    Sphere,
    TorusZ,
    Vec3,
    analytic_volume,
    make_surface,
    parse_region,
)
from fitsgeo._mc_common import compile_region, count_hits, numba_available
from fitsgeo.cells import _default_box


def benchmark_cases():
    sphere = make_surface(1, "sphere", Sphere(Vec3(0, 0, 0), 1.0))
    torus = make_surface(2, "torus", TorusZ(Vec3(0, 0, 0), 3.0, 1.0, 1.0))
    box = make_surface(3, "box", Box(Vec3(-1, -1, -1), Vec3(1.2, 0.6, 0),
                                     Vec3(-0.6, 1.2, 0), Vec3(0, 0, 1.5)))
    pipe = make_surface(4, "pipe", Rcc(Vec3(0, 0, -2), Vec3(0.3, 0.2, 4.0), 0.7))
    surfaces = [sphere, torus, box, pipe]
    model = Model(surfaces=surfaces, cells=[
        Cell(1, "sphere", SenseRef(1, -1), VOID),
        Cell(2, "torus", SenseRef(2, -1), VOID),
        Cell(3, "csg", parse_region("(-1 : -3) #(-4)"), VOID),
        Cell(4, "outer", SenseRef(2, +1), OUTER),
    ])
    return model, [(c.id, c.name) for c in model.cells[:3]]


def run(model, cell_id, n, seed, backend):
    cell = model.cell(cell_id)
    compiled = compile_region(model, cell.region)
    box = _default_box(model, cell.region)
    start = time.perf_counter()
    hits = count_hits(compiled, box, n, seed, backend=backend)
    return hits, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2_000_000)
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    model, cases = benchmark_cases()
    backends = ["numpy"]
    if numba_available():
        run(model, cases[0][0], 1000, 0, "numba")  # JIT warm-up
        backends.insert(0, "numba")
    else:
        print("numba not importable; benchmarking numpy only")

    n = args.samples
    print(f"{n:,} samples per cell, seed {args.seed}\n")
    header = f"{'cell':10s}" + "".join(f"{b:>14s}" for b in backends)
    print(header + f"{'speedup':>10s}" if len(backends) == 2 else header)
    for cell_id, name in cases:
        times = {}
        hits = {}
        for backend in backends:
            hits[backend], times[backend] = run(model, cell_id, n, args.seed,
                                                backend)
        if len(backends) == 2 and hits["numba"] != hits["numpy"]:
            raise SystemExit(f"backend mismatch on {name}: {hits}")
        row = f"{name:10s}" + "".join(
            f"{times[b]:>12.3f}s" for b in backends)
        if len(backends) == 2:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)
        exact = None
        cell = model.cell(cell_id)
        if isinstance(cell.region, SenseRef) and cell.region.sign < 0:
            exact = analytic_volume(model.surface(cell.region.surface_id).kind)
        box = _default_box(model, cell.region)
        estimate = box.volume() * hits[backends[0]] / n
        note = f" (exact {exact:.4f})" if exact is not None else ""
        print(f"{'':10s}-> estimate {estimate:.4f}{note},"
              f" hits {hits[backends[0]]:,}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
