"""0-1 encoding of ancilla-free synthesis at a fixed depth bound.

Per depth: an enable bit per requested family, a one-hot target selector,
and control selectors; 2^n state bits per line thread the truth-table rows
through the stages. The control-satisfaction conjunction and the target
update use the standard exact AND/XOR linearizations with constant folding,
so depth 0 carries no variables at all.

Instead of the permutation-network target selection, a per-depth one-hot
selector picks the target line; gating constraints pin the selectors of a
disabled stage and stage enables pack to the front. Neither changes
feasibility or the optimal objective, they only cut symmetric assignments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from revsynth.core.boolfunc import bit_of
from revsynth.core.gates import Circuit, ControlLiteral, Gate, GateKind, Permutation
from revsynth.core.library import CostModel, default_cost_model
from revsynth.ilp.model import IlpModel

# Literals: ("const", 0/1), ("pos", var), ("neg", var) meaning 1 - var.


def _lit_not(lit):
    tag, v = lit
    if tag == "const":
        return ("const", 1 - v)
    return ("neg", v) if tag == "pos" else ("pos", v)


def _affine(lit):
    tag, v = lit
    if tag == "const":
        return v, ()
    if tag == "pos":
        return 0, ((1, v),)
    return 1, ((-1, v),)


class _Builder:
    def __init__(self, model: IlpModel):
        self.model = model
        self.counter = 0

    def fresh(self, prefix: str = "w") -> str:
        name = f"{prefix}{self.counter}"
        self.counter += 1
        return self.model.add_binary(name)

    def constrain(self, parts, sense: str, rhs: int) -> None:
        """parts: iterable of (coef, lit); constants fold into the rhs."""
        terms = []
        for coef, lit in parts:
            off, lin = _affine(lit)
            rhs -= coef * off
            terms.extend((coef * c, v) for c, v in lin)
        self.model.add_constraint(terms, sense, rhs)

    def require_equal(self, lit, value: int) -> None:
        tag, v = lit
        if tag == "const":
            if v != value:
                self.mark_infeasible()
            return
        self.constrain([(1, lit)], "=", value)

    def mark_infeasible(self) -> None:
        if not self.model.has_variable("never"):
            never = self.model.add_binary("never")
            self.model.add_constraint([(1, never)], ">=", 1)
            self.model.add_constraint([(1, never)], "<=", 0)

    def land(self, a, b):
        if a == ("const", 0) or b == ("const", 0):
            return ("const", 0)
        if a == ("const", 1):
            return b
        if b == ("const", 1):
            return a
        if a == b:
            return a
        if a == _lit_not(b):
            return ("const", 0)
        z = ("pos", self.fresh())
        self.constrain([(1, z), (-1, a)], "<=", 0)
        self.constrain([(1, z), (-1, b)], "<=", 0)
        self.constrain([(1, z), (-1, a), (-1, b)], ">=", -1)
        return z

    def land_all(self, lits):
        acc = ("const", 1)
        for lit in lits:
            acc = self.land(acc, lit)
        return acc

    def lxor(self, a, b):
        if a == ("const", 0):
            return b
        if b == ("const", 0):
            return a
        if a == ("const", 1):
            return _lit_not(b)
        if b == ("const", 1):
            return _lit_not(a)
        if a == b:
            return ("const", 0)
        if a == _lit_not(b):
            return ("const", 1)
        w = ("pos", self.fresh())
        self.constrain([(1, w), (-1, a), (-1, b)], "<=", 0)
        self.constrain([(1, w), (-1, a), (1, b)], ">=", 0)
        self.constrain([(1, w), (1, a), (-1, b)], ">=", 0)
        self.constrain([(1, w), (1, a), (1, b)], "<=", 2)
        return w

    def lor(self, a, b):
        return _lit_not(self.land(_lit_not(a), _lit_not(b)))


@dataclass(frozen=True)
class EncodingSpec:
    target: Permutation
    depth: int
    families: tuple[str, ...] = ("tof",)
    objective: str = "gates"

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be non-negative")
        families = tuple(self.families)
        if not families or any(f not in ("tof", "fred") for f in families):
            raise ValueError("families must be a non-empty subset of {'tof', 'fred'}")
        if self.objective not in ("gates", "qc"):
            raise ValueError("objective must be 'gates' or 'qc'")
        object.__setattr__(self, "families", families)

    @property
    def n(self) -> int:
        return self.target.n


def _qc_weights(kind: GateKind, n: int, model: CostModel) -> tuple[int, int]:
    """Affine fit (base on the enable, slope per control selector).

    Interpolates between the 0-control and max-control costs; exact only when
    the family's cost is affine in the control count, which the default table
    is not for Toffoli (1, 1, 5, ...).
    """
    max_controls = n - 1 if kind is GateKind.TOF else n - 2
    base = model.cost(kind, 0)
    if max_controls <= 0:
        return base, 0
    slope = round((model.cost(kind, max_controls) - base) / max_controls)
    return base, slope


def build_model(spec: EncodingSpec, cost_model: CostModel | None = None) -> IlpModel:
    n = spec.n
    size = 1 << n
    model = IlpModel()
    b = _Builder(model)
    use_tof = "tof" in spec.families
    use_fred = "fred" in spec.families
    pairs = list(combinations(range(n), 2))

    # Decision variables first so the naive solver branches on them before aux bits.
    et, ef, sel, ct, pr, cf = {}, {}, {}, {}, {}, {}
    for d in range(spec.depth):
        if use_tof:
            et[d] = model.add_binary(f"et_{d}")
            for i in range(n):
                sel[d, i] = model.add_binary(f"s_{d}_{i}")
            for i in range(n):
                ct[d, i] = model.add_binary(f"ct_{d}_{i}")
        if use_fred:
            ef[d] = model.add_binary(f"ef_{d}")
            for p in range(len(pairs)):
                pr[d, p] = model.add_binary(f"pr_{d}_{p}")
            for i in range(n):
                cf[d, i] = model.add_binary(f"cf_{d}_{i}")

    for d in range(spec.depth):
        enables = [et[d]] if use_tof else []
        if use_fred:
            enables.append(ef[d])
        if len(enables) == 2:
            model.add_constraint([(1, enables[0]), (1, enables[1])], "<=", 1)
        if d + 1 < spec.depth:
            nxt = ([et[d + 1]] if use_tof else []) + ([ef[d + 1]] if use_fred else [])
            model.add_constraint([(1, v) for v in enables] + [(-1, v) for v in nxt], ">=", 0)
        if use_tof:
            # One-hot target; a disabled stage parks the selector on line 0
            # and clears every control.
            model.add_constraint([(1, sel[d, i]) for i in range(n)], "=", 1)
            for i in range(1, n):
                model.add_constraint([(1, sel[d, i]), (-1, et[d])], "<=", 0)
            for i in range(n):
                model.add_constraint([(1, ct[d, i]), (-1, et[d])], "<=", 0)
                model.add_constraint([(1, ct[d, i]), (1, sel[d, i])], "<=", 1)
        if use_fred:
            model.add_constraint([(1, pr[d, p]) for p in range(len(pairs))], "=", 1)
            for p in range(1, len(pairs)):
                model.add_constraint([(1, pr[d, p]), (-1, ef[d])], "<=", 0)
            for i in range(n):
                model.add_constraint([(1, cf[d, i]), (-1, ef[d])], "<=", 0)
            for p, (i, j) in enumerate(pairs):
                model.add_constraint([(1, cf[d, i]), (1, pr[d, p])], "<=", 1)
                model.add_constraint([(1, cf[d, j]), (1, pr[d, p])], "<=", 1)

    # State bits per line and truth-table row; depth 0 is the input expansion.
    state = [[("const", bit_of(m, i, n)) for m in range(size)] for i in range(n)]

    for d in range(spec.depth):
        if use_tof:
            en_lit = ("pos", et[d])
            sel_lits = [("pos", sel[d, i]) for i in range(n)]
            ct_lits = [("pos", ct[d, i]) for i in range(n)]
            new_state = [row[:] for row in state]
            for m in range(size):
                hold = [b.lor(state[i][m], _lit_not(ct_lits[i])) for i in range(n)]
                active = b.land_all(hold + [en_lit])
                for i in range(n):
                    flip = b.land(active, sel_lits[i])
                    new_state[i][m] = b.lxor(state[i][m], flip)
            state = new_state
        if use_fred:
            en_lit = ("pos", ef[d])
            pr_lits = [("pos", pr[d, p]) for p in range(len(pairs))]
            cf_lits = [("pos", cf[d, i]) for i in range(n)]
            new_state = [row[:] for row in state]
            for m in range(size):
                hold = [b.lor(state[i][m], _lit_not(cf_lits[i])) for i in range(n)]
                active = b.land_all(hold + [en_lit])
                swaps = []
                for p, (i, j) in enumerate(pairs):
                    differ = b.lxor(state[i][m], state[j][m])
                    swaps.append(b.land_all([active, differ, pr_lits[p]]))
                for i in range(n):
                    flip = ("const", 0)
                    for p, (pi, pj) in enumerate(pairs):
                        if i in (pi, pj):
                            flip = b.lxor(flip, swaps[p])
                    new_state[i][m] = b.lxor(state[i][m], flip)
            state = new_state

    for i in range(n):
        for m in range(size):
            b.require_equal(state[i][m], bit_of(spec.target.images[m], i, n))

    model_costs = cost_model if cost_model is not None else default_cost_model()
    if spec.objective == "gates":
        for d in range(spec.depth):
            if use_tof:
                model.add_objective_term(1, et[d])
            if use_fred:
                model.add_objective_term(1, ef[d])
    else:
        if use_tof:
            base, slope = _qc_weights(GateKind.TOF, n, model_costs)
            for d in range(spec.depth):
                model.add_objective_term(base, et[d])
                for i in range(n):
                    model.add_objective_term(slope, ct[d, i])
        if use_fred:
            base, slope = _qc_weights(GateKind.FRED, n, model_costs)
            for d in range(spec.depth):
                model.add_objective_term(base, ef[d])
                for i in range(n):
                    model.add_objective_term(slope, cf[d, i])
    return model


def decode_solution(spec: EncodingSpec, assignment: dict[str, int]) -> Circuit:
    """Read the decision variables of a feasible assignment back into gates."""
    n = spec.n
    pairs = list(combinations(range(n), 2))
    gates = []
    for d in range(spec.depth):
        if "tof" in spec.families and assignment.get(f"et_{d}"):
            target = next(i for i in range(n) if assignment[f"s_{d}_{i}"])
            controls = tuple(ControlLiteral(i) for i in range(n) if assignment[f"ct_{d}_{i}"])
            gates.append(Gate(GateKind.TOF, (target,), controls))
        if "fred" in spec.families and assignment.get(f"ef_{d}"):
            p = next(p for p in range(len(pairs)) if assignment[f"pr_{d}_{p}"])
            controls = tuple(ControlLiteral(i) for i in range(n) if assignment[f"cf_{d}_{i}"])
            gates.append(Gate(GateKind.FRED, pairs[p], controls))
    return Circuit(n, tuple(gates))
