"""Gate-library enumeration and quantum-cost models.

Family letters follow the census column headers: N = NOT (0-control TOF),
C = CNOT (1 control), T = TOF with 2+ controls, F = Fredkin with at least one
control (the bare swap is deliberately excluded), P = both Peres directions on
every ordered wire triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from revsynth.core.gates import ControlLiteral, Gate, GateKind, fred, peres, tof
from revsynth.errors import CostModelError

FAMILY_ORDER = "NCTFP"


@dataclass(frozen=True)
class GateLibrary:
    families: frozenset[str]
    mixed_polarity: bool = False

    def __post_init__(self):
        families = frozenset(f.upper() for f in self.families)
        if not families:
            raise ValueError("library needs at least one family")
        unknown = families - set(FAMILY_ORDER)
        if unknown:
            raise ValueError(f"unknown gate families: {sorted(unknown)}")
        object.__setattr__(self, "families", families)

    @classmethod
    def from_spec(cls, letters: str, mixed_polarity: bool = False) -> "GateLibrary":
        return cls(frozenset(letters.upper()), mixed_polarity)

    @property
    def name(self) -> str:
        # Conventional column label order (nct, ncf, nctf, nctpf).
        return "".join(f for f in "NCTPF" if f in self.families).lower()

    @property
    def polarity_label(self) -> str:
        return "+/-" if self.mixed_polarity else "+"


NCT = GateLibrary.from_spec("nct")
NCF = GateLibrary.from_spec("ncf")
NCTF = GateLibrary.from_spec("nctf")
NCTPF = GateLibrary.from_spec("nctpf")


def _polarity_patterns(k: int, mixed: bool):
    if not mixed:
        yield (True,) * k
    else:
        yield from product((True, False), repeat=k)


def _tof_gates(n: int, sizes, mixed: bool):
    for target in range(n):
        others = [w for w in range(n) if w != target]
        for k in sizes:
            if k > len(others):
                continue
            for lines in combinations(others, k):
                for pols in _polarity_patterns(k, mixed):
                    yield tof(target, [ControlLiteral(l, p) for l, p in zip(lines, pols)])


def enumerate_gates(n: int, library: GateLibrary) -> list[Gate]:
    """Deterministic, duplicate-free gate list for a width and library.

    Families that need more wires than `n` provides contribute nothing.
    """
    if n < 1:
        raise ValueError("width must be at least 1")
    mixed = library.mixed_polarity
    gates: list[Gate] = []
    if "N" in library.families:
        gates.extend(_tof_gates(n, [0], mixed))
    if "C" in library.families:
        gates.extend(_tof_gates(n, [1], mixed))
    if "T" in library.families:
        gates.extend(_tof_gates(n, range(2, n), mixed))
    if "F" in library.families:
        for t1, t2 in combinations(range(n), 2):
            others = [w for w in range(n) if w not in (t1, t2)]
            for k in range(1, len(others) + 1):
                for lines in combinations(others, k):
                    for pols in _polarity_patterns(k, mixed):
                        gates.append(fred(t1, t2, [ControlLiteral(l, p) for l, p in zip(lines, pols)]))
    if "P" in library.families:
        for p, q, r in permutations(range(n), 3):
            if mixed:
                # The TOF-then-CNOT forms with independent polarities already
                # realize every mixed Peres permutation once; adding the
                # reversed-order forms would only duplicate them.
                for p_pos, q_pos, c_pos in _polarity_patterns(3, True):
                    gates.append(peres(p, q, r, p_pos, q_pos, c_pos))
            else:
                gates.append(peres(p, q, r))
                gates.append(peres(p, q, r, inverse=True))
    return gates


@dataclass(frozen=True)
class CostModel:
    """Integer cost per (gate kind, control count); polarity never matters."""

    entries: tuple[tuple[tuple[GateKind, int], int], ...]

    def __post_init__(self):
        table = dict(self.entries)
        if any(v < 0 for v in table.values()):
            raise ValueError("costs must be non-negative")
        object.__setattr__(self, "entries", tuple(sorted(table.items(), key=lambda e: (e[0][0].value, e[0][1]))))
        object.__setattr__(self, "_table", table)

    def cost(self, kind: GateKind, control_count: int) -> int:
        try:
            return self._table[(kind, control_count)]
        except KeyError:
            raise CostModelError(f"cost model has no entry for {kind.value} with {control_count} controls")

    def with_override(self, kind: GateKind, control_count: int, value: int) -> "CostModel":
        table = dict(self.entries)
        table[(kind, control_count)] = value
        return CostModel(tuple(table.items()))


def default_cost_model() -> CostModel:
    """NOT = CNOT = 1, 2-control TOF = 5, 1-control Fredkin = 7, Peres = 4.

    Larger control counts use placeholder growth laws (TOF: 2^k + 1, Fredkin:
    its CNOT + TOF(k+1) + CNOT decomposition) and are meant to be overridden
    when a calibrated table is available.
    """
    entries: dict[tuple[GateKind, int], int] = {}
    entries[(GateKind.TOF, 0)] = 1
    entries[(GateKind.TOF, 1)] = 1
    for k in range(2, 16):
        entries[(GateKind.TOF, k)] = (1 << k) + 1
    entries[(GateKind.FRED, 0)] = 3
    for k in range(1, 15):
        entries[(GateKind.FRED, k)] = entries[(GateKind.TOF, k + 1)] + 2
    entries[(GateKind.PERES, 1)] = 4
    entries[(GateKind.PERES_INV, 1)] = 4
    return CostModel(tuple(entries.items()))


def _cost_count(gate: Gate) -> int:
    if gate.kind in (GateKind.PERES, GateKind.PERES_INV):
        return 1
    return len(gate.controls)


def gate_cost(gate: Gate, model: CostModel) -> int:
    return model.cost(gate.kind, _cost_count(gate))


def circuit_cost(circuit, model: CostModel) -> int:
    return sum(gate_cost(g, model) for g in circuit.gates)
