"""Constructive ancilla-free synthesis by sorting the permutation.

Each cycle factors into element transpositions, and a transposition of two
states i, k costs 2h - 1 Toffoli gates where h is their Hamming distance:
walk the differing bits of i toward k with one fully-controlled gate per bit,
then undo the walk in reverse order minus the last step. The result is sound
but not optimal in general.
"""

from __future__ import annotations

from dataclasses import dataclass

from revsynth.core.boolfunc import bit_of
from revsynth.core.gates import Circuit, ControlLiteral, Gate, GateKind, Permutation, simulate_circuit


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles rotated to start at their minimum, sorted by that minimum."""

    cycles: tuple[tuple[int, ...], ...]
    fixed_points: frozenset[int]

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(v) for v in cyc) + ")" for cyc in self.cycles)


@dataclass(frozen=True)
class FunctionalDigraph:
    """Vertices 0..2^n-1 with one edge (v, image of v) per vertex."""

    n: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BlockInterchange:
    """Positions {i, j, k, l} exchanging two blocks of a sequence.

    Definition-only: with unit blocks (j = i+1, l = k+1) a single
    fully-controlled Toffoli realizes the exchange of two states at Hamming
    distance 1; wider blocks have no single-gate realization in general.
    """

    i: int
    j: int
    k: int
    l: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.k < self.l:
            raise ValueError("need 1 <= i < j <= k < l")

    def apply(self, seq: list) -> list:
        i, j, k, l = self.i - 1, self.j - 1, self.k - 1, self.l - 1
        return seq[:i] + seq[k:l] + seq[j:k] + seq[i:j] + seq[l:]


def functional_digraph(perm: Permutation) -> FunctionalDigraph:
    return FunctionalDigraph(perm.n, tuple((v, perm.images[v]) for v in range(len(perm.images))))


def cycle_decompose(perm: Permutation) -> CycleDecomposition:
    seen = [False] * len(perm.images)
    cycles = []
    fixed = set()
    for start in range(len(perm.images)):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm.images[v]
        if len(cyc) == 1:
            fixed.add(start)
        else:
            cycles.append(tuple(cyc))  # starts at its minimum by construction
    return CycleDecomposition(tuple(cycles), frozenset(fixed))


def recompose_cycles(decomp: CycleDecomposition, n: int) -> Permutation:
    images = list(range(1 << n))
    for cyc in decomp.cycles:
        for pos, v in enumerate(cyc):
            images[v] = cyc[(pos + 1) % len(cyc)]
    return Permutation(n, tuple(images))


def swap_cost(i: int, k: int, n: int) -> int:
    """Gate count 2h - 1 for transposing states i and k."""
    if i == k:
        raise ValueError("states must differ")
    if not (0 <= i < 1 << n and 0 <= k < 1 << n):
        raise ValueError("states must fit in n bits")
    h = bin(i ^ k).count("1")
    return 2 * h - 1


def swap_codewords(i: int, k: int, n: int) -> list[Gate]:
    """Fully-controlled Toffoli sequence realizing exactly the transposition (i k).

    Differing bits are taken in ascending wire index; step t targets the t-th
    one with the other n-1 bits of the running codeword as controls. The
    forward walk moves i to k, the reversed prefix undoes the side effects.
    """
    if i == k:
        raise ValueError("states must differ")
    forward = []
    current = i
    for wire in range(n):
        if bit_of(i ^ k, wire, n) == 0:
            continue
        controls = tuple(ControlLiteral(w, bool(bit_of(current, w, n)))
                         for w in range(n) if w != wire)
        forward.append(Gate(GateKind.TOF, (wire,), controls))
        current ^= 1 << (n - 1 - wire)
    return forward + forward[:-1][::-1]


def _transposition_schedule(perm: Permutation, greedy: bool) -> list[tuple[int, int]]:
    """Transpositions whose codeword circuits, emitted in order, compose to perm."""
    if not greedy:
        schedule = []
        for cyc in cycle_decompose(perm).cycles:
            anchor = cyc[0]
            # (a1 a2), (a1 a3), ... applied in that order walks the cycle.
            schedule.extend((anchor, other) for other in cyc[1:])
        return schedule
    # Greedy: repeatedly clear the cheapest (state, image) pair; the picks
    # reduce perm from the output side, so the circuit emits them reversed.
    residual = list(perm.images)
    picks = []
    while True:
        moved = [x for x in range(len(residual)) if residual[x] != x]
        if not moved:
            break
        x = min(moved, key=lambda v: (swap_cost(v, residual[v], perm.n), v))
        y = residual[x]
        picks.append((x, y))
        for s in range(len(residual)):
            if residual[s] == x:
                residual[s] = y
            elif residual[s] == y:
                residual[s] = x
        residual[x] = x
    return picks[::-1]


def synthesize_by_sorting(perm: Permutation, greedy: bool = False) -> Circuit:
    """Sound, generally non-optimal circuit for perm via transposition sorting.

    The default schedule factors each cycle from its anchor; `greedy` instead
    repeatedly applies the cheapest available transposition (no optimality
    claim either way). The emitted circuit is verified before returning.
    """
    gates: list[Gate] = []
    for a, b in _transposition_schedule(perm, greedy):
        gates.extend(swap_codewords(a, b, perm.n))
    circuit = Circuit(perm.n, tuple(gates))
    if not simulate_circuit(circuit).compose(perm.inverse()).is_identity():
        raise AssertionError("internal error: sorting synthesis failed verification")
    return circuit


def sorting_gate_count(perm: Permutation, greedy: bool = False) -> int:
    return sum(swap_cost(a, b, perm.n) for a, b in _transposition_schedule(perm, greedy))
