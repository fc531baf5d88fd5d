"""Exhaustive distance census over the permutation graph.

The graph is never materialized: visited/distance state lives in rank-indexed
arrays of length (2^n)! and neighbors are generated on the fly from the gate
library's permutation actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from revsynth.core.gates import apply_gate
from revsynth.core.library import CostModel, GateLibrary, default_cost_model, enumerate_gates, gate_cost
from revsynth.errors import CensusWidthError
from revsynth.pathsynth import kernels

MAX_CENSUS_WIDTH = 3

_GATE_PERMS_CACHE: dict = {}
_DISTANCE_CACHE: dict = {}


def gate_permutations(n: int, library: GateLibrary):
    """Library gates plus their permutation actions as a (G, 2^n) uint8 array."""
    key = (n, library)
    hit = _GATE_PERMS_CACHE.get(key)
    if hit is None:
        gates = enumerate_gates(n, library)
        size = 1 << n
        arr = np.array([[apply_gate(g, s, n) for s in range(size)] for g in gates],
                       dtype=np.uint8).reshape(len(gates), size)
        hit = (gates, arr)
        _GATE_PERMS_CACHE[key] = hit
    return hit


def _model_key(cost_model: CostModel | None):
    return None if cost_model is None else cost_model.entries


def distance_table(n: int, library: GateLibrary, objective: str = "gates",
                   cost_model: CostModel | None = None, backend: str | None = None):
    """(gates, gate_perms, distance array) for every permutation rank.

    Cached per (n, library, objective, cost model); both backends produce the
    same array so the cache is backend-agnostic.
    """
    if objective not in ("gates", "qc"):
        raise ValueError(f"objective must be 'gates' or 'qc', got {objective!r}")
    if n > MAX_CENSUS_WIDTH:
        raise CensusWidthError(
            f"exhaustive search stores ({1 << n})! distances; widths beyond "
            f"n = {MAX_CENSUS_WIDTH} are rejected (got n = {n})")
    key = (n, library, objective, _model_key(cost_model) if objective == "qc" else None)
    hit = _DISTANCE_CACHE.get(key)
    if hit is None:
        gates, gate_perms = gate_permutations(n, library)
        if objective == "gates":
            dist = kernels.gate_count_distances(gate_perms, backend=backend)
        else:
            model = cost_model if cost_model is not None else default_cost_model()
            weights = [gate_cost(g, model) for g in gates]
            dist = kernels.weighted_distances(gate_perms, weights, backend=backend)
        dist.setflags(write=False)
        hit = (gates, gate_perms, dist)
        _DISTANCE_CACHE[key] = hit
    return hit


@dataclass(frozen=True)
class CensusTable:
    """Histogram of optimal distances over all (2^n)! permutations."""

    n: int
    library: GateLibrary
    objective: str
    counts: tuple[int, ...]
    unreached: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def average(self) -> Fraction:
        return Fraction(sum(d * c for d, c in enumerate(self.counts)), self.total)

    @property
    def average_str(self) -> str:
        return f"{float(self.average):.2f}"

    def report_lines(self, fmt: str = "text") -> list[str]:
        if fmt == "tsv":
            lib, pol = self.library.name, self.library.polarity_label
            return [f"{lib}\t{pol}\t{d}\t{c}" for d, c in enumerate(self.counts)]
        lines = [f"d {d} {c}" for d, c in enumerate(self.counts)]
        lines.append(f"avg {self.average_str}")
        return lines


def census(n: int, library: GateLibrary, objective: str = "gates",
           cost_model: CostModel | None = None, backend: str | None = None) -> CensusTable:
    """Exact distance histogram from the identity to every permutation."""
    _, _, dist = distance_table(n, library, objective, cost_model, backend)
    sentinel = kernels.UNREACHED_GC if objective == "gates" else kernels.UNREACHED_QC
    reached = dist[dist != sentinel]
    counts = np.bincount(reached.astype(np.int64))
    return CensusTable(n, library, objective, tuple(int(c) for c in counts),
                       unreached=int(dist.size - reached.size))
