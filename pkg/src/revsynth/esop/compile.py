"""Compile ESOPs to bounded-ancilla circuits.

k cubes become k mixed-polarity Toffoli gates on n + (output count) lines:
the inputs pass through untouched and ancilla line n+j accumulates output j.
Mixed polarity absorbs what would otherwise be NOT gates around the controls.
"""

from __future__ import annotations

from typing import Sequence

from revsynth.core.boolfunc import Esop, eval_esop
from revsynth.core.gates import Circuit, ControlLiteral, Gate, GateKind, apply_gate


def esop_to_circuit(outputs: Sequence[Esop], n: int) -> Circuit:
    """One gate per cube, targeting the ancilla of the cube's output."""
    if any(e.n != n for e in outputs):
        raise ValueError("all outputs must have the stated input width")
    lines = n + len(outputs)
    gates = []
    for j, esop in enumerate(outputs):
        for cube in esop.cubes:
            controls = tuple(ControlLiteral(k, sym == "1")
                             for k, sym in enumerate(cube.literals) if sym != "-")
            gates.append(Gate(GateKind.TOF, (n + j,), controls))
    return Circuit(lines, tuple(gates))


def check_esop_circuit(circuit: Circuit, outputs: Sequence[Esop], n: int) -> bool:
    """Simulate with cleared ancillas: inputs restored, ancilla j = output j."""
    m = len(outputs)
    if circuit.n != n + m:
        return False
    for a in range(1 << n):
        state = a << m  # input bits on the top lines, ancillas zero
        for gate in circuit.gates:
            state = apply_gate(gate, state, circuit.n)
        if state >> m != a:
            return False
        for j, esop in enumerate(outputs):
            got = (state >> (m - 1 - j)) & 1
            if got != eval_esop(esop, a):
                return False
    return True
