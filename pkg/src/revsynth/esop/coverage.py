"""Signed coverage matrix between all cubes and a function's canonical cube set.

Rows and columns both run over all 3^n cubes in lexicographic order with
'-' < '0' < '1'. Row r has a nonzero entry in column c exactly when c lies in
r's normal-form expansion: +1 when c belongs to the function's ON column set,
-1 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from revsynth.core.boolfunc import Cube, TruthTable, all_cubes
from revsynth.esop.snf import SnfSet, snf_expand_cube, snf_of_function


@dataclass(frozen=True)
class CoverageMatrix:
    n: int
    cubes: tuple[Cube, ...]
    entries: np.ndarray
    on_columns: frozenset[Cube]

    def index_of(self, cube: Cube) -> int:
        return self.cubes.index(cube)

    def entry(self, row: Cube, col: Cube) -> int:
        return int(self.entries[self.index_of(row), self.index_of(col)])

    def row(self, cube: Cube) -> list[int]:
        return [int(v) for v in self.entries[self.index_of(cube)]]


def coverage_matrix_from_on_set(n: int, on_columns) -> CoverageMatrix:
    cubes = tuple(all_cubes(n))
    on = frozenset(on_columns)
    index = {c: i for i, c in enumerate(cubes)}
    size = len(cubes)
    entries = np.zeros((size, size), dtype=np.int8)
    for i, row_cube in enumerate(cubes):
        for col_cube in snf_expand_cube(row_cube):
            entries[i, index[col_cube]] = 1 if col_cube in on else -1
    entries.setflags(write=False)
    return CoverageMatrix(n, cubes, entries, on)


def build_coverage_matrix(tt: TruthTable) -> CoverageMatrix:
    return coverage_matrix_from_on_set(tt.n, snf_of_function(tt).cubes)


def coverage_matrix_of_snf(snf: SnfSet) -> CoverageMatrix:
    return coverage_matrix_from_on_set(snf.n, snf.cubes)
