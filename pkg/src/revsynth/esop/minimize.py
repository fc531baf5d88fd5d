"""Exact ESOP minimization.

Feasibility of a cube selection is tested over minterm parity: a cube
multiset XORs to f exactly when every ON minterm is covered an odd number of
times and every OFF minterm an even number. That check runs over 2^n packed
bits instead of the 3^n canonical columns and gives identical answers, since
both states say "the selected rows XOR to the function". No minimal solution
repeats a cube (two copies cancel), so the search draws each cube at most
once.
"""

from __future__ import annotations

from revsynth.core.boolfunc import (
    Cube,
    Esop,
    TruthTable,
    all_cubes,
    anf_transform,
    cube_minterm_mask,
)
from revsynth.core.library import CostModel, GateKind, default_cost_model
from revsynth.errors import InfeasibleAtBudgetError
from revsynth.esop.xorcover import min_xor_cover


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _ordered_cubes(tt: TruthTable):
    """All cubes sorted by descending ON-minterm coverage, ties lexicographic."""
    on_mask = tt.to_mask()
    cubes = all_cubes(tt.n)
    masks = [cube_minterm_mask(c) for c in cubes]
    order = sorted(range(len(cubes)),
                   key=lambda i: (-_popcount(masks[i] & on_mask), cubes[i].literals))
    return [cubes[i] for i in order], [masks[i] for i in order]


def exact_esop_minimize(tt: TruthTable, cube_budget: int | None = None,
                        objective: str = "cubes",
                        cost_model: CostModel | None = None) -> Esop:
    """An ESOP for `tt` with the fewest cubes (or least summed gate cost).

    Iterative-deepening branch and bound; the cube list of the result is
    reported in lexicographic order. With `cube_budget` set, raises
    InfeasibleAtBudgetError when no ESOP of at most that many cubes exists.
    The "qc" objective charges each cube the cost of its compiled
    ancilla-targeting Toffoli gate.
    """
    if objective not in ("cubes", "qc"):
        raise ValueError(f"objective must be 'cubes' or 'qc', got {objective!r}")
    target = tt.to_mask()
    cubes, masks = _ordered_cubes(tt)
    if objective == "cubes":
        picked = min_xor_cover(masks, target, size_limit=cube_budget)
        if picked is None:
            raise InfeasibleAtBudgetError(
                f"no ESOP with at most {cube_budget} cubes exists for this function")
        chosen = [cubes[i] for i in picked]
    else:
        model = cost_model if cost_model is not None else default_cost_model()
        costs = [model.cost(GateKind.TOF, c.control_count()) for c in cubes]
        chosen = _min_cost_cover(cubes, masks, costs, target, cube_budget)
    return Esop(tt.n, tuple(sorted(chosen, key=str)))


def esop_fits_within(tt: TruthTable, cube_budget: int) -> bool:
    """Decision form: is there an ESOP of `tt` with at most `cube_budget` cubes?"""
    target = tt.to_mask()
    _, masks = _ordered_cubes(tt)
    return min_xor_cover(masks, target, size_limit=cube_budget) is not None


def _min_cost_cover(cubes, masks, costs, target, cube_budget):
    """Branch and bound on summed cost, element-driven like min_xor_cover."""
    if target == 0:
        return []
    by_bit: dict[int, list[int]] = {}
    for idx, mask in enumerate(masks):
        bit = mask
        while bit:
            low = bit & -bit
            by_bit.setdefault(low.bit_length() - 1, []).append(idx)
            bit ^= low
    # Any feasible selection bounds the optimum; the unweighted minimum is one.
    seed = min_xor_cover(masks, target, size_limit=cube_budget)
    if seed is None:
        raise InfeasibleAtBudgetError(
            f"no ESOP with at most {cube_budget} cubes exists for this function")
    cheapest = min(costs)
    best_cost = sum(costs[i] for i in seed)
    best_pick = list(seed)
    max_cubes = len(masks) if cube_budget is None else cube_budget

    def dfs(residual: int, banned: int, used: int, cost: int, chosen: list[int]):
        nonlocal best_cost, best_pick
        if residual == 0:
            if cost < best_cost:
                best_cost = cost
                best_pick = list(chosen)
            return
        if used == max_cubes or cost + cheapest >= best_cost:
            return
        pivot = (residual & -residual).bit_length() - 1
        for idx in by_bit.get(pivot, ()):
            if banned >> idx & 1:
                continue
            chosen.append(idx)
            dfs(residual ^ masks[idx], banned | (1 << idx), used + 1,
                cost + costs[idx], chosen)
            chosen.pop()
            banned |= 1 << idx

    dfs(target, 0, 0, 0, [])
    return [cubes[i] for i in best_pick]


def minterm_parity_instance(tt: TruthTable, esop: Esop):
    """Translate an ESOP of `tt` into an xor-cover instance plus candidate.

    Universe: the ON minterms; family: every cube's covered ON minterms;
    candidate: the ESOP's own cubes. Valid ESOPs of `tt` hit each ON minterm
    an odd number of times, so the verifier accepts them.
    """
    from revsynth.esop.xorcover import XorCoverInstance

    on = frozenset(a for a in range(1 << tt.n) if tt.bits[a])
    cubes = all_cubes(tt.n)
    covered = {}
    for cube in cubes:
        mask = cube_minterm_mask(cube)
        covered[cube] = frozenset(a for a in on if mask >> a & 1)
    family = tuple(covered[c] for c in cubes)
    inst = XorCoverInstance(on, family, max(len(esop.cubes), 1))
    candidate = [covered[c] for c in esop.cubes]
    return inst, candidate


def anf_cube_count(tt: TruthTable) -> int:
    """Cube count of the positive-polarity canonical form, an upper bound."""
    return sum(anf_transform(tt).coeffs)
