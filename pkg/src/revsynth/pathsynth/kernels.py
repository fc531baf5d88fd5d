"""Distance-fill kernels over the permutation graph.

Two interchangeable backends compute exact distances from the identity to
every permutation of {0..2^n-1}, given the per-gate permutation actions:

* numba: scalar-loop kernels compiled with @njit (default when importable)
* numpy: vectorized frontier processing, no compilation step

Selection: the REVSYNTH_BACKEND environment variable ("numba" or "numpy"),
or an explicit `backend=` argument; unset means numba when available.
Both backends produce identical distance arrays; benchmarks/bench_census.py
compares their runtimes.
"""

from __future__ import annotations

import os
from itertools import permutations as _iter_permutations

import numpy as np

from revsynth.errors import CensusWidthError, RevsynthError

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

# Unreached sentinels; gate-count distances fit one byte, weighted two.
UNREACHED_GC = np.uint8(0xFF)
UNREACHED_QC = np.uint16(0xFFFF)

# 8! states is the exhaustive ceiling (3 wires); anything above would need
# terabytes for the distance array alone.
_MAX_STATES = 50_000_000

_ALL_PERMS_CACHE: dict[int, np.ndarray] = {}


def resolve_backend(explicit: str | None = None) -> str:
    choice = explicit or os.environ.get("REVSYNTH_BACKEND", "").strip().lower()
    if not choice:
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise RevsynthError(f"unknown backend {choice!r}; use 'numba' or 'numpy'")
    if choice == "numba" and not HAS_NUMBA:
        raise RevsynthError("numba backend requested but numba is not importable")
    return choice


def all_permutations(size: int) -> np.ndarray:
    """All size! permutations of range(size), row r = the rank-r permutation.

    Lexicographic enumeration matches the factorial-number-system rank, so
    row 0 is the identity.
    """
    cached = _ALL_PERMS_CACHE.get(size)
    if cached is None:
        import math

        if math.factorial(size) > _MAX_STATES:
            raise CensusWidthError(f"cannot tabulate {size}! permutations")
        cached = np.array(list(_iter_permutations(range(size))), dtype=np.uint8)
        _ALL_PERMS_CACHE[size] = cached
    return cached


def _factorials(size: int) -> np.ndarray:
    fact = np.ones(size + 1, dtype=np.int64)
    for i in range(1, size + 1):
        fact[i] = fact[i - 1] * i
    return fact


def rank_rows(rows: np.ndarray, fact: np.ndarray) -> np.ndarray:
    """Vectorized Lehmer rank of each row of permutations."""
    m, size = rows.shape
    ranks = np.zeros(m, dtype=np.int64)
    for i in range(size):
        smaller_after = (rows[:, i + 1:] < rows[:, i:i + 1]).sum(axis=1, dtype=np.int64)
        ranks += smaller_after * fact[size - 1 - i]
    return ranks


# ---------------------------------------------------------------------------
# numpy backend

def _bfs_numpy(all_perms: np.ndarray, gate_perms: np.ndarray, fact: np.ndarray,
               dist: np.ndarray) -> None:
    sentinel = UNREACHED_GC
    size = all_perms.shape[1]
    dist[0] = 0
    cur = np.array([0], dtype=np.int64)
    d = 0
    while cur.size:
        perms = all_perms[cur]
        succ = gate_perms[:, perms]  # (G, m, size): every gate applied to every frontier perm
        ranks = rank_rows(succ.reshape(-1, size), fact)
        fresh = ranks[dist[ranks] == sentinel]
        cur = np.unique(fresh)
        dist[cur] = d + 1
        d += 1


def _dial_numpy(all_perms: np.ndarray, gate_perms: np.ndarray, weights: np.ndarray,
                fact: np.ndarray, dist: np.ndarray) -> None:
    count = all_perms.shape[0]
    settled = np.zeros(count, dtype=bool)
    dist[0] = 0
    max_tent = 0
    d = 0
    while d <= max_tent:
        # Re-scan the level until quiet so zero-weight edges stay correct.
        while True:
            active = np.nonzero((dist == d) & ~settled)[0]
            if active.size == 0:
                break
            settled[active] = True
            perms = all_perms[active]
            for g in range(gate_perms.shape[0]):
                ranks = rank_rows(gate_perms[g][perms], fact)
                tent = d + int(weights[g])
                better = tent < dist[ranks]
                if better.any():
                    dist[ranks[better]] = tent
                    if tent > max_tent:
                        max_tent = tent
        d += 1


# ---------------------------------------------------------------------------
# numba backend

if HAS_NUMBA:

    @njit(cache=True)
    def _rank_nb(perm, fact):
        size = perm.shape[0]
        rank = 0
        for i in range(size):
            smaller_after = 0
            for j in range(i + 1, size):
                if perm[j] < perm[i]:
                    smaller_after += 1
            rank += smaller_after * fact[size - 1 - i]
        return rank

    @njit(cache=True)
    def _bfs_numba(all_perms, gate_perms, fact, dist, sentinel):
        count, size = all_perms.shape
        n_gates = gate_perms.shape[0]
        cur = np.empty(count, np.int64)
        nxt = np.empty(count, np.int64)
        buf = np.empty(size, np.uint8)
        dist[0] = 0
        cur[0] = 0
        n_cur = 1
        d = 0
        while n_cur > 0:
            n_nxt = 0
            for idx in range(n_cur):
                p = all_perms[cur[idx]]
                for g in range(n_gates):
                    for i in range(size):
                        buf[i] = gate_perms[g, p[i]]
                    r = _rank_nb(buf, fact)
                    if dist[r] == sentinel:
                        dist[r] = d + 1
                        nxt[n_nxt] = r
                        n_nxt += 1
            cur, nxt = nxt, cur
            n_cur = n_nxt
            d += 1

    @njit(cache=True)
    def _dial_numba(all_perms, gate_perms, weights, fact, dist):
        count, size = all_perms.shape
        n_gates = gate_perms.shape[0]
        settled = np.zeros(count, np.uint8)
        buf = np.empty(size, np.uint8)
        dist[0] = 0
        max_tent = 0
        d = 0
        while d <= max_tent:
            progress = True
            while progress:
                progress = False
                for r in range(count):
                    if dist[r] == d and settled[r] == 0:
                        settled[r] = 1
                        progress = True
                        p = all_perms[r]
                        for g in range(n_gates):
                            for i in range(size):
                                buf[i] = gate_perms[g, p[i]]
                            nr = _rank_nb(buf, fact)
                            tent = d + weights[g]
                            if tent < dist[nr]:
                                dist[nr] = tent
                                if tent > max_tent:
                                    max_tent = tent
            d += 1


# ---------------------------------------------------------------------------
# public entry points

def gate_count_distances(gate_perms: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Distance (in gates) from identity to every permutation rank."""
    if gate_perms.ndim != 2:
        raise ValueError("gate_perms must be a (gates, states) array")
    size = gate_perms.shape[1]
    all_perms = all_permutations(size)
    fact = _factorials(size)
    dist = np.full(all_perms.shape[0], UNREACHED_GC, dtype=np.uint8)
    if gate_perms.shape[0] == 0:
        dist[0] = 0
        return dist
    if resolve_backend(backend) == "numba":
        _bfs_numba(all_perms, np.ascontiguousarray(gate_perms, dtype=np.uint8),
                   fact, dist, UNREACHED_GC)
    else:
        _bfs_numpy(all_perms, np.ascontiguousarray(gate_perms, dtype=np.uint8), fact, dist)
    return dist


def weighted_distances(gate_perms: np.ndarray, weights, backend: str | None = None) -> np.ndarray:
    """Minimum summed gate cost from identity to every permutation rank."""
    if gate_perms.ndim != 2:
        raise ValueError("gate_perms must be a (gates, states) array")
    size = gate_perms.shape[1]
    weights = np.asarray(weights, dtype=np.int64)
    if weights.ndim != 1 or weights.shape[0] != gate_perms.shape[0]:
        raise ValueError("need one weight per gate")
    if (weights < 0).any():
        raise ValueError("weights must be non-negative")
    all_perms = all_permutations(size)
    fact = _factorials(size)
    dist = np.full(all_perms.shape[0], UNREACHED_QC, dtype=np.uint16)
    if gate_perms.shape[0] == 0:
        dist[0] = 0
        return dist
    if resolve_backend(backend) == "numba":
        _dial_numba(all_perms, np.ascontiguousarray(gate_perms, dtype=np.uint8),
                    weights, fact, dist)
    else:
        _dial_numpy(all_perms, np.ascontiguousarray(gate_perms, dtype=np.uint8),
                    weights, fact, dist)
    return dist
