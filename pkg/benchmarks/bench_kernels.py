"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot operations (candidate-cell enumeration, free-cell
masking, hub scanning) on random dense objects of increasing size and
prints a speedup table.  Usage: python benchmarks/bench_kernels.py
"""
import random
import time

import numpy as np

from gridgaps.backend import available_backends

SIZES = [100, 500, 2000, 8000]
REPEATS = 3


def make_object(rng, size):
    box = max(4, round(size ** (1 / 3) * 1.3))
    pts = set()
    while len(pts) < size:
        pts.add(tuple(rng.randrange(box) for _ in range(3)))
    return np.unique(np.array(sorted(pts), dtype=np.int64) * 2, axis=0)


def time_backend(mod, vox2):
    best = {}
    cells = np.unique(mod.enumerate_candidate_cells(vox2), axis=0)
    proper = np.ascontiguousarray(cells[np.any(cells % 2 != 0, axis=1)])
    vertices = np.ascontiguousarray(cells[np.all(cells % 2 != 0, axis=1)])
    for name, fn in [
        ("enumerate", lambda: mod.enumerate_candidate_cells(vox2)),
        ("free_mask", lambda: mod.free_mask(proper, vox2)),
        ("hub_scan", lambda: mod.hub_mask(vertices, vox2)),
    ]:
        best[name] = min(
            _timed(fn) for _ in range(REPEATS)
        )
    return best


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    backends = available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; benchmarking python backend only")
    rng = random.Random(0)
    header = f"{'voxels':>8} {'op':<10}" + "".join(
        f" {name:>12}" for name in backends
    )
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    for size in SIZES:
        vox2 = make_object(rng, size)
        results = {name: time_backend(mod, vox2) for name, mod in backends.items()}
        for op in ("enumerate", "free_mask", "hub_scan"):
            line = f"{size:>8} {op:<10}" + "".join(
                f" {results[name][op] * 1e3:>10.2f}ms" for name in backends
            )
            if len(backends) == 2:
                line += f" {results['python'][op] / results['compiled'][op]:>8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
