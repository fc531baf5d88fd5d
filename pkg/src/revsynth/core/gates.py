"""Reversible gates, circuits, and permutation semantics.

Gates act on n-wire states; wire x0 is the most significant bit of the state
index. Toffoli-family gates flip one target when all control literals hold,
Fredkin gates swap two targets, and the two Peres kinds are the fixed
TOF+CNOT composition in its two orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from revsynth.core.boolfunc import MAX_VARS, TruthTable, bit_of


class GateKind(Enum):
    TOF = "TOF"
    FRED = "FRED"
    PERES = "PERES"
    PERES_INV = "SPERES"


@dataclass(frozen=True)
class ControlLiteral:
    line: int
    positive: bool = True

    def __post_init__(self):
        if self.line < 0:
            raise ValueError("control line must be non-negative")


def _as_literal(c) -> ControlLiteral:
    if isinstance(c, ControlLiteral):
        return c
    if isinstance(c, int):
        return ControlLiteral(c)
    line, positive = c
    return ControlLiteral(line, bool(positive))


@dataclass(frozen=True)
class Gate:
    """One reversible gate.

    targets: (t,) for TOF, the two swapped wires for FRED, and (q, r) for the
    Peres kinds. For Peres gates `controls` holds exactly two literals: the
    pure control p and the shared wire q, each with the polarity it
    contributes to the TOF half; `cnot_positive` is the polarity p
    contributes to the CNOT half. The three polarities are independent: tying
    the CNOT polarity to the TOF one makes opposite-direction gates coincide
    as permutations and shrinks the mixed family from 48 to 24.
    """

    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[ControlLiteral, ...] = ()
    cnot_positive: bool = True

    def __post_init__(self):
        targets = tuple(self.targets)
        controls = tuple(_as_literal(c) for c in self.controls)
        if len(set(targets)) != len(targets):
            raise ValueError("target wires must be distinct")
        lines = [c.line for c in controls]
        if len(set(lines)) != len(lines):
            raise ValueError("control lines must be distinct")
        if self.kind is GateKind.TOF:
            if len(targets) != 1:
                raise ValueError("TOF has exactly one target")
            if targets[0] in lines:
                raise ValueError("TOF controls must avoid the target")
            controls = tuple(sorted(controls, key=lambda c: c.line))
        elif self.kind is GateKind.FRED:
            if len(targets) != 2:
                raise ValueError("FRED has exactly two targets")
            if set(targets) & set(lines):
                raise ValueError("FRED controls must avoid both targets")
            targets = tuple(sorted(targets))
            controls = tuple(sorted(controls, key=lambda c: c.line))
        else:
            q, r = targets if len(targets) == 2 else (None, None)
            if q is None:
                raise ValueError("Peres gates have targets (q, r)")
            if len(controls) != 2 or controls[1].line != q:
                raise ValueError("Peres gates carry literals (p, q) with q = targets[0]")
            p = controls[0].line
            if p in (q, r):
                raise ValueError("Peres wires p, q, r must be distinct")
        if self.kind in (GateKind.TOF, GateKind.FRED) and not self.cnot_positive:
            raise ValueError("cnot_positive applies to Peres kinds only")
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "controls", controls)

    def wires(self) -> set[int]:
        return set(self.targets) | {c.line for c in self.controls}


def tof(target: int, controls=()) -> Gate:
    return Gate(GateKind.TOF, (target,), tuple(_as_literal(c) for c in controls))


def fred(t1: int, t2: int, controls=()) -> Gate:
    return Gate(GateKind.FRED, (t1, t2), tuple(_as_literal(c) for c in controls))


def peres(p: int, q: int, r: int, p_positive: bool = True, q_positive: bool = True,
          cnot_positive: bool | None = None, inverse: bool = False) -> Gate:
    """Peres gate on wires (p, q, r); the CNOT polarity defaults to p's."""
    kind = GateKind.PERES_INV if inverse else GateKind.PERES
    if cnot_positive is None:
        cnot_positive = p_positive
    return Gate(kind, (q, r), (ControlLiteral(p, p_positive), ControlLiteral(q, q_positive)),
                cnot_positive=cnot_positive)


def invert_gate(gate: Gate) -> Gate:
    """Gate realizing the inverse permutation (TOF/FRED are self-inverse)."""
    if gate.kind is GateKind.PERES:
        return Gate(GateKind.PERES_INV, gate.targets, gate.controls, gate.cnot_positive)
    if gate.kind is GateKind.PERES_INV:
        return Gate(GateKind.PERES, gate.targets, gate.controls, gate.cnot_positive)
    return gate


def _controls_hold(controls: tuple[ControlLiteral, ...], state: int, n: int) -> bool:
    for c in controls:
        if bit_of(state, c.line, n) != (1 if c.positive else 0):
            return False
    return True


def apply_gate(gate: Gate, state: int, n: int) -> int:
    """Image of `state` under one gate on n wires."""
    if gate.kind is GateKind.TOF:
        if _controls_hold(gate.controls, state, n):
            state ^= 1 << (n - 1 - gate.targets[0])
        return state
    if gate.kind is GateKind.FRED:
        if _controls_hold(gate.controls, state, n):
            t1, t2 = gate.targets
            b1 = bit_of(state, t1, n)
            b2 = bit_of(state, t2, n)
            if b1 != b2:
                state ^= (1 << (n - 1 - t1)) | (1 << (n - 1 - t2))
        return state
    # Peres kinds: TOF({p,q}; r) and CNOT({p}; q), in gate order for PERES
    # and reversed for PERES_INV. Applied sequentially on the running state.
    p_lit, q_lit = gate.controls
    q, r = gate.targets
    cnot_lit = ControlLiteral(p_lit.line, gate.cnot_positive)
    stages = ("tof", "cnot") if gate.kind is GateKind.PERES else ("cnot", "tof")
    for stage in stages:
        if stage == "tof":
            if _controls_hold((p_lit, q_lit), state, n):
                state ^= 1 << (n - 1 - r)
        else:
            if _controls_hold((cnot_lit,), state, n):
                state ^= 1 << (n - 1 - q)
    return state


@dataclass(frozen=True)
class Permutation:
    """Reversible n-wire function as a bijection on {0 .. 2^n - 1}."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"line count must be in 1..{MAX_VARS}, got {self.n}")
        images = tuple(int(v) for v in self.images)
        size = 1 << self.n
        if len(images) != size or sorted(images) != list(range(size)):
            raise ValueError(f"images must be a bijection on 0..{size - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1 << n)))

    def __call__(self, state: int) -> int:
        return self.images[state]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(self.n, tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if self.n != other.n:
            raise ValueError("widths differ")
        return Permutation(self.n, tuple(self.images[v] for v in other.images))

    def output_truth_tables(self) -> list[TruthTable]:
        """Per-line output functions: table i holds bit i of every image."""
        size = 1 << self.n
        return [
            TruthTable(self.n, tuple(bit_of(self.images[m], i, self.n) for m in range(size)))
            for i in range(self.n)
        ]


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        gates = tuple(self.gates)
        for g in gates:
            if any(w >= self.n or w < 0 for w in g.wires()):
                raise ValueError(f"gate uses wires beyond the {self.n}-line circuit")
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)


def simulate_circuit(circuit: Circuit) -> Permutation:
    """Permutation obtained by applying the gates in list order."""
    n = circuit.n
    images = []
    for start in range(1 << n):
        state = start
        for gate in circuit.gates:
            state = apply_gate(gate, state, n)
        images.append(state)
    return Permutation(n, tuple(images))


def verify_circuit(circuit: Circuit, target: Permutation) -> bool:
    """True iff the circuit's permutation composed with target^-1 is identity."""
    if circuit.n != target.n:
        return False
    return simulate_circuit(circuit).compose(target.inverse()).is_identity()
