#!/usr/bin/env python3
"""Time the census kernels under both backends.

Runs the distance fills for a few representative 3-wire censuses with the
numba kernels and the pure-numpy fallback, prints a per-case table and the
speedup. Numba compilation happens in a warmup pass so it is excluded.
"""

import time

import numpy as np

from revsynth.core.library import GateLibrary, default_cost_model, gate_cost
from revsynth.pathsynth import kernels
from revsynth.pathsynth.census import gate_permutations

CASES = [
    ("nct", False, "gates"),
    ("nct", True, "gates"),
    ("nctpf", True, "gates"),
    ("nct", False, "qc"),
    ("ncf", False, "qc"),
]

REPEATS = 3


def run(gate_perms, weights, backend):
    if weights is None:
        return kernels.gate_count_distances(gate_perms, backend=backend)
    return kernels.weighted_distances(gate_perms, weights, backend=backend)


def main():
    backends = ["numpy"]
    if kernels.HAS_NUMBA:
        backends.insert(0, "numba")
    else:
        print("numba not importable; timing the numpy fallback only")
    model = default_cost_model()

    print(f"{'case':<18} " + " ".join(f"{b + ' (s)':>12}" for b in backends) +
          ("   speedup" if len(backends) == 2 else ""))
    for lib_name, mixed, objective in CASES:
        lib = GateLibrary.from_spec(lib_name, mixed)
        gates, gate_perms = gate_permutations(3, lib)
        weights = None if objective == "gates" else [gate_cost(g, model) for g in gates]
        label = f"{lib_name}{'/mixed' if mixed else '/pos'} {objective}"
        timings = []
        reference = None
        for backend in backends:
            run(gate_perms, weights, backend)  # warmup / jit compile
            best = min(
                _timed(gate_perms, weights, backend) for _ in range(REPEATS))
            timings.append(best)
            dist = run(gate_perms, weights, backend)
            if reference is None:
                reference = dist
            elif not np.array_equal(reference, dist):
                raise SystemExit(f"backend results differ for {label}")
        row = f"{label:<18} " + " ".join(f"{t:>12.4f}" for t in timings)
        if len(timings) == 2:
            row += f"   {timings[1] / timings[0]:>6.1f}x"
        print(row)


def _timed(gate_perms, weights, backend):
    start = time.perf_counter()
    run(gate_perms, weights, backend)
    return time.perf_counter() - start


if __name__ == "__main__":
    main()
