"""Special normal form: the canonical mixed-polarity ESOP.

Each cube rewrites position-wise through the identities x = 1 xor !x,
!x = 1 xor x, and 1 = x xor !x, giving 0 -> {-,1}, 1 -> {-,0}, - -> {0,1}.
The Cartesian product across positions turns one cube into 2^n cubes whose
XOR still computes the original cube; accumulating the expansion of any ESOP
of f and cancelling even multiplicities yields one canonical cube set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from revsynth.core.boolfunc import Cube, Esop, TruthTable, anf_to_esop, anf_transform

_REWRITE = {"0": ("-", "1"), "1": ("-", "0"), "-": ("0", "1")}


def snf_expand_cube(cube: Cube) -> frozenset[Cube]:
    """The 2^n pairwise-distinct cubes whose XOR equals `cube`."""
    choices = [_REWRITE[sym] for sym in cube.literals]
    return frozenset(Cube("".join(pick)) for pick in product(*choices))


@dataclass(frozen=True)
class SnfSet:
    """Duplicate-free cube set; XOR-evaluating the members reproduces f."""

    n: int
    cubes: frozenset[Cube]

    def __post_init__(self):
        if any(c.n != self.n for c in self.cubes):
            raise ValueError("all cubes must share the set's width")

    def sorted_cubes(self) -> list[Cube]:
        return sorted(self.cubes, key=str)


def snf_of_esop(esop: Esop) -> SnfSet:
    """Accumulate expansions mod 2; the result is independent of the ESOP chosen."""
    acc: set[Cube] = set()
    for cube in esop.cubes:
        acc ^= snf_expand_cube(cube)
    return SnfSet(esop.n, frozenset(acc))


def snf_of_function(tt: TruthTable) -> SnfSet:
    return snf_of_esop(anf_to_esop(anf_transform(tt)))
