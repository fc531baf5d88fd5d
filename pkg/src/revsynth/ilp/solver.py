"""Reference exact 0-1 solver: depth-first branch and bound.

Branches on the first undecided variable in declaration order, value 0 before
1, with bound propagation on touched constraints and objective pruning.
Deterministic by construction; meant for desk-scale models, not competition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from revsynth.ilp.model import IlpModel

UNASSIGNED = -1


@dataclass(frozen=True)
class SolveResult:
    status: str  # 'optimal' | 'infeasible' | 'limit'
    assignment: dict[str, int] | None
    objective: int | None
    nodes: int

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"


class _Row:
    __slots__ = ("terms", "rhs")

    def __init__(self, terms, rhs):
        self.terms = terms  # tuple of (var_index, coef), meaning terms >= rhs
        self.rhs = rhs


def _normalized_rows(model: IlpModel, index: dict[str, int]) -> list[_Row]:
    rows = []
    for con in model.constraints:
        terms = tuple((index[var], coef) for coef, var in con.terms)
        if con.sense in (">=", "="):
            rows.append(_Row(terms, con.rhs))
        if con.sense in ("<=", "="):
            rows.append(_Row(tuple((v, -c) for v, c in terms), -con.rhs))
    return rows


def solve_naive(model: IlpModel, node_limit: int | None = None,
                time_limit: float | None = None) -> SolveResult:
    index = {name: i for i, name in enumerate(model.variables)}
    nvars = len(model.variables)
    rows = _normalized_rows(model, index)
    watch: list[list[int]] = [[] for _ in range(nvars)]
    for ridx, row in enumerate(rows):
        for v, _ in row.terms:
            watch[v].append(ridx)
    obj = [0] * nvars
    for coef, var in model.objective:
        obj[index[var]] += coef
    obj_vars = [v for v in range(nvars) if obj[v]]

    values = [UNASSIGNED] * nvars
    trail: list[int] = []

    def propagate(queue: list[int]) -> bool:
        """Fixpoint bound propagation; False on conflict."""
        while queue:
            v = queue.pop()
            for ridx in watch[v]:
                row = rows[ridx]
                hi = 0
                unassigned = []
                for var, coef in row.terms:
                    val = values[var]
                    if val == UNASSIGNED:
                        if coef > 0:
                            hi += coef
                        unassigned.append((var, coef))
                    else:
                        hi += coef * val
                if hi < row.rhs:
                    return False
                for var, coef in unassigned:
                    # The value that lowers the reachable maximum below the
                    # bound is impossible; force the other one.
                    if hi - abs(coef) < row.rhs and values[var] == UNASSIGNED:
                        values[var] = 1 if coef > 0 else 0
                        trail.append(var)
                        queue.append(var)
        return True

    def lower_bound() -> int:
        lb = 0
        for v in obj_vars:
            val = values[v]
            if val == UNASSIGNED:
                lb += min(0, obj[v])
            else:
                lb += obj[v] * val
        return lb

    # Empty row (possible after constant folding): check feasibility directly.
    for row in rows:
        if not row.terms and 0 < row.rhs:
            return SolveResult("infeasible", None, None, 0)

    best_obj: int | None = None
    best_assignment: dict[str, int] | None = None
    nodes = 0
    started = time.monotonic()
    status = "optimal"
    # Each frame: [decision var, list of values left to try, trail mark].
    decisions: list[list] = []

    def backtrack() -> bool:
        """Move to the next unexplored branch; False when exhausted."""
        nonlocal nodes
        while decisions:
            frame = decisions[-1]
            var, remaining, mark = frame
            while len(trail) > mark:
                values[trail.pop()] = UNASSIGNED
            if not remaining:
                decisions.pop()
                continue
            value = remaining.pop(0)
            nodes += 1
            values[var] = value
            trail.append(var)
            if propagate([var]):
                return True
        return False

    feasible_root = propagate(list(range(nvars)))
    alive = feasible_root
    while alive:
        if node_limit is not None and nodes > node_limit:
            status = "limit"
            break
        if time_limit is not None and nodes % 128 == 0 \
                and time.monotonic() - started > time_limit:
            status = "limit"
            break
        if best_obj is not None and lower_bound() >= best_obj:
            alive = backtrack()
            continue
        scan = decisions[-1][0] if decisions else 0
        while scan < nvars and values[scan] != UNASSIGNED:
            scan += 1
        if scan == nvars:
            candidate = lower_bound()
            if best_obj is None or candidate < best_obj:
                best_obj = candidate
                best_assignment = {name: values[i] for i, name in enumerate(model.variables)}
            alive = backtrack()
            continue
        decisions.append([scan, [1], len(trail)])
        nodes += 1
        values[scan] = 0
        trail.append(scan)
        if not propagate([scan]):
            alive = backtrack()

    if status == "limit":
        return SolveResult("limit", best_assignment,
                           best_obj if best_assignment is not None else None, nodes)
    if best_assignment is None:
        return SolveResult("infeasible", None, None, nodes)
    return SolveResult("optimal", best_assignment, best_obj, nodes)
