import math

import numpy as np
import pytest

from revsynth.core.gates import Permutation, apply_gate, simulate_circuit
from revsynth.core.library import NCT, NCTF, NCTPF, GateLibrary, default_cost_model, gate_cost
from revsynth.errors import CensusWidthError, SearchBudgetError
from revsynth.pathsynth import kernels
from revsynth.pathsynth.census import census, distance_table, gate_permutations
from revsynth.pathsynth.indexer import PermutationIndexer
from revsynth.pathsynth.synth import distance_between, neighbors, synthesize_optimal

PERES = Permutation(3, (0, 1, 2, 3, 6, 7, 5, 4))
FREDKIN = Permutation(3, (0, 1, 2, 3, 4, 6, 5, 7))
NCT_MIXED = GateLibrary.from_spec("nct", True)
NCTF_MIXED = GateLibrary.from_spec("nctf", True)
NCTPF_MIXED = GateLibrary.from_spec("nctpf", True)


def test_indexer_round_trip_small():
    idx = PermutationIndexer(1)
    assert idx.count == 2
    assert [idx.unrank(r) for r in range(2)] == [(0, 1), (1, 0)]
    idx2 = PermutationIndexer(2)
    assert idx2.count == 24
    for r in range(24):
        assert idx2.rank(idx2.unrank(r)) == r


def test_indexer_identity_rank_zero():
    idx = PermutationIndexer(3)
    assert idx.rank(tuple(range(8))) == 0
    assert idx.unrank(0) == tuple(range(8))
    with pytest.raises(ValueError):
        idx.unrank(math.factorial(8))


def test_neighbors_identity_counts():
    ident = Permutation.identity(3)
    for lib, want in [(NCT, 12), (NCTPF_MIXED, 81)]:
        seen = {p.images for _, p in neighbors(ident, lib)}
        assert len(seen) == want
        assert tuple(range(8)) not in seen


def test_neighbors_applying_tof_twice_returns():
    # Toffoli/Fredkin edges are undirected: the same gate undoes the step.
    ident = Permutation.identity(3)
    for gate, perm in neighbors(ident, NCT):
        images = tuple(apply_gate(gate, v, 3) for v in perm.images)
        assert images == tuple(range(8))


def test_census_width_one():
    t = census(1, GateLibrary(frozenset("N")))
    assert t.counts == (1, 1)


def test_census_rejects_width_four():
    with pytest.raises(CensusWidthError):
        census(4, NCT)


def test_census_histograms_sum(three_var_tables):
    for lib in (NCT, NCT_MIXED, NCTF_MIXED, NCTPF_MIXED):
        t = census(3, lib)
        assert t.total == math.factorial(8)
        assert t.unreached == 0


def test_census_width_two_sums():
    t = census(2, NCT)
    assert t.total == math.factorial(4)


def test_gate_count_equals_unit_cost_qc():
    unit = default_cost_model()
    for kind_count in list(dict(unit.entries)):
        unit = unit.with_override(*kind_count, 1)
    by_gates = census(3, NCTF_MIXED, "gates")
    by_cost = census(3, NCTF_MIXED, "qc", unit)
    assert by_gates.counts == by_cost.counts


def test_backends_agree():
    gates, gate_perms = gate_permutations(3, NCT_MIXED)
    a = kernels.gate_count_distances(gate_perms, backend="numpy")
    if kernels.HAS_NUMBA:
        b = kernels.gate_count_distances(gate_perms, backend="numba")
        assert np.array_equal(a, b)
    model = default_cost_model()
    weights = [gate_cost(g, model) for g in gates]
    c = kernels.weighted_distances(gate_perms, weights, backend="numpy")
    if kernels.HAS_NUMBA:
        d = kernels.weighted_distances(gate_perms, weights, backend="numba")
        assert np.array_equal(c, d)


def test_backend_env_selection(monkeypatch):
    monkeypatch.setenv("REVSYNTH_BACKEND", "numpy")
    assert kernels.resolve_backend() == "numpy"
    monkeypatch.setenv("REVSYNTH_BACKEND", "bogus")
    with pytest.raises(Exception):
        kernels.resolve_backend()
    monkeypatch.delenv("REVSYNTH_BACKEND")
    assert kernels.resolve_backend() in ("numba", "numpy")


def test_synthesize_peres_and_fredkin():
    r = synthesize_optimal(PERES, NCT)
    assert r.distance == 2 and len(r.circuit) == 2
    assert simulate_circuit(r.circuit).images == PERES.images
    r2 = synthesize_optimal(FREDKIN, NCT)
    assert r2.distance == 3


def test_synthesize_identity():
    r = synthesize_optimal(Permutation.identity(3), NCT)
    assert r.distance == 0 and len(r.circuit) == 0


def test_synthesize_qc_objective():
    r = synthesize_optimal(PERES, NCT, objective="qc")
    assert r.distance == 6  # TOF(5) + CNOT(1)
    assert simulate_circuit(r.circuit).images == PERES.images
    rp = synthesize_optimal(PERES, NCTPF, objective="qc")
    assert rp.distance == 4  # native peres


def test_synthesis_matches_census_bucket(rng):
    _, _, dist = distance_table(3, NCT_MIXED, "gates")
    idx = PermutationIndexer(3)
    for _ in range(25):
        images = list(range(8))
        rng.shuffle(images)
        perm = Permutation(3, tuple(images))
        r = synthesize_optimal(perm, NCT_MIXED)
        assert r.distance == int(dist[idx.rank(perm.images)])
        assert simulate_circuit(r.circuit).images == perm.images


def test_distance_symmetric_under_inverse(rng):
    _, _, dist = distance_table(3, NCT, "gates")
    idx = PermutationIndexer(3)
    for _ in range(1000):
        images = list(range(8))
        rng.shuffle(images)
        perm = Permutation(3, tuple(images))
        assert dist[idx.rank(perm.images)] == dist[idx.rank(perm.inverse().images)]


def test_library_monotonicity():
    # Fixed polarity: more families can only shorten circuits, pointwise.
    for mixed in (False, True):
        nct = distance_table(3, GateLibrary.from_spec("nct", mixed))[2]
        nctf = distance_table(3, GateLibrary.from_spec("nctf", mixed))[2]
        nctpf = distance_table(3, GateLibrary.from_spec("nctpf", mixed))[2]
        assert (nct >= nctf).all()
        assert (nctf >= nctpf).all()


def test_distance_between_invariance(rng):
    assert distance_between(PERES, PERES, NCT) == 0
    assert distance_between(PERES, Permutation.identity(3), NCT) == 2
    for _ in range(5):
        images = list(range(8))
        rng.shuffle(images)
        sigma = Permutation(3, tuple(images))
        assert distance_between(sigma.compose(PERES), sigma, NCT) == 2


def test_bidirectional_width_four():
    from revsynth.core.gates import apply_gate
    from revsynth.core.library import enumerate_gates

    gates = enumerate_gates(4, NCT)
    g = gates[-1]  # a 3-control gate
    images = tuple(apply_gate(g, s, 4) for s in range(16))
    r = synthesize_optimal(Permutation(4, images), NCT)
    assert r.distance == 1
    two = tuple(apply_gate(gates[2], v, 4) for v in images)
    r2 = synthesize_optimal(Permutation(4, two), NCT)
    assert r2.distance == 2
    assert simulate_circuit(r2.circuit).images == two


def test_bidirectional_budget_exhausted():
    images = list(range(16))
    images[0], images[15] = 15, 0
    with pytest.raises(SearchBudgetError):
        synthesize_optimal(Permutation(4, tuple(images)), NCT, state_budget=50)


def test_qc_point_query_width_four_rejected():
    with pytest.raises(CensusWidthError):
        synthesize_optimal(Permutation.identity(4), NCT, objective="qc")
