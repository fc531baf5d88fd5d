from itertools import combinations

import pytest

from revsynth.core.boolfunc import (
    Cube,
    TruthTable,
    all_cubes,
    cube_minterm_mask,
    esop_to_truth_table,
)
from revsynth.core.library import GateKind, default_cost_model
from revsynth.errors import InfeasibleAtBudgetError
from revsynth.esop.minimize import (
    anf_cube_count,
    esop_fits_within,
    exact_esop_minimize,
    minterm_parity_instance,
)
from revsynth.esop.snf import snf_expand_cube
from revsynth.esop.xorcover import xor_cover_verify


def brute_force_minimum(tt):
    """Independent oracle: exhaustive subset search in plain lexicographic order."""
    masks = [cube_minterm_mask(c) for c in all_cubes(tt.n)]
    target = tt.to_mask()
    for k in range(len(masks) + 1):
        for pick in combinations(range(len(masks)), k):
            acc = 0
            for idx in pick:
                acc ^= masks[idx]
            if acc == target:
                return k
    raise AssertionError("unreachable")


def test_minimize_and():
    esop = exact_esop_minimize(TruthTable.from_string("0001"))
    assert [str(c) for c in esop.cubes] == ["11"]


def test_minimize_or_size_two():
    tt = TruthTable.from_string("0111")
    esop = exact_esop_minimize(tt)
    assert len(esop.cubes) == 2
    assert esop_to_truth_table(esop) == tt


def test_minimize_xor():
    tt = TruthTable.from_string("0110")
    esop = exact_esop_minimize(tt)
    assert len(esop.cubes) == 2
    assert esop_to_truth_table(esop) == tt


def test_minimize_constant_zero():
    assert exact_esop_minimize(TruthTable.from_string("0000")).cubes == ()


def test_minimize_matches_oracle_two_vars(two_var_tables):
    for tt in two_var_tables:
        esop = exact_esop_minimize(tt)
        assert esop_to_truth_table(esop) == tt
        assert len(esop.cubes) == brute_force_minimum(tt)
        assert len(esop.cubes) <= max(anf_cube_count(tt), 0) or anf_cube_count(tt) == 0


def test_minimize_size_bounded_by_anf(three_var_tables):
    for tt in three_var_tables[::17]:
        esop = exact_esop_minimize(tt)
        assert len(esop.cubes) <= anf_cube_count(tt) or anf_cube_count(tt) == 0


def test_budget_infeasible():
    xor = TruthTable.from_string("0110")
    with pytest.raises(InfeasibleAtBudgetError):
        exact_esop_minimize(xor, cube_budget=1)
    assert not esop_fits_within(xor, 1)
    assert esop_fits_within(xor, 2)


def test_budget_feasible_unchanged():
    tt = TruthTable.from_string("0111")
    assert len(exact_esop_minimize(tt, cube_budget=2).cubes) == 2


def test_weighted_minimisation_matches_brute_force(two_var_tables):
    model = default_cost_model()
    costs = {str(c): model.cost(GateKind.TOF, c.control_count()) for c in all_cubes(2)}
    masks = [cube_minterm_mask(c) for c in all_cubes(2)]
    names = [str(c) for c in all_cubes(2)]
    for tt in two_var_tables:
        target = tt.to_mask()
        best = None
        for k in range(6):
            for pick in combinations(range(9), k):
                acc = 0
                for idx in pick:
                    acc ^= masks[idx]
                if acc == target:
                    cost = sum(costs[names[i]] for i in pick)
                    best = cost if best is None else min(best, cost)
        esop = exact_esop_minimize(tt, objective="qc")
        got = sum(costs[str(c)] for c in esop.cubes)
        assert esop_to_truth_table(esop) == tt
        assert got == best


def test_result_cubes_sorted_and_deterministic():
    tt = TruthTable.from_string("0111")
    a = exact_esop_minimize(tt)
    b = exact_esop_minimize(tt)
    assert a == b
    assert [str(c) for c in a.cubes] == sorted(str(c) for c in a.cubes)


def test_minimizer_output_passes_xor_cover_verifier(three_var_tables):
    for tt in three_var_tables[::13]:
        if not any(tt.bits):
            continue
        esop = exact_esop_minimize(tt)
        inst, candidate = minterm_parity_instance(tt, esop)
        assert xor_cover_verify(inst, candidate)


def test_replication_bounds(three_var_tables):
    # Column coverage multiplicity in minimal solutions: ON columns at most
    # 2^n - 1 times, OFF columns at most 2^n times.
    from revsynth.esop.snf import snf_of_function

    n = 3
    for tt in three_var_tables[::7]:
        esop = exact_esop_minimize(tt)
        on = snf_of_function(tt).cubes
        multiplicity: dict[Cube, int] = {}
        for cube in esop.cubes:
            for col in snf_expand_cube(cube):
                multiplicity[col] = multiplicity.get(col, 0) + 1
        for col, count in multiplicity.items():
            if col in on:
                assert count <= (1 << n) - 1
            else:
                assert count <= 1 << n
