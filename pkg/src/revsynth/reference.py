"""Bundled reference census tables and the diff used by `reproduce`."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from revsynth.errors import FormatError

COLUMN_ORDER = [
    ("nct", "+"), ("nct", "+/-"),
    ("ncf", "+"), ("ncf", "+/-"),
    ("nctf", "+"), ("nctf", "+/-"),
    ("nctpf", "+"), ("nctpf", "+/-"),
]


@dataclass(frozen=True)
class ReferenceColumn:
    library: str
    polarity: str
    counts: tuple[int, ...]
    average: str
    flagged: frozenset[int]  # rows marked as known-discrepant in the reference


def load_reference(objective: str) -> dict[tuple[str, str], ReferenceColumn]:
    name = {"gates": "census_gc.txt", "qc": "census_qc.txt"}[objective]
    text = resources.files("revsynth.data").joinpath(name).read_text()
    columns: dict[tuple[str, str], ReferenceColumn] = {}
    current: tuple[str, str] | None = None
    counts: list[int] = []
    flagged: set[int] = set()

    def close(avg: str):
        if current is None:
            raise FormatError("avg before any column")
        columns[current] = ReferenceColumn(current[0], current[1], tuple(counts),
                                           avg, frozenset(flagged))

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "table":
            continue
        if tokens[0] == "column":
            current = (tokens[1], tokens[2])
            counts, flagged = [], set()
        elif tokens[0] == "avg":
            close(tokens[1])
        else:
            d, count = int(tokens[0]), int(tokens[1])
            if d != len(counts):
                raise FormatError(f"non-contiguous distance rows near {line!r}")
            counts.append(count)
            if tokens[2:] == ["!"]:
                flagged.add(d)
    return columns


@dataclass(frozen=True)
class CellDiff:
    distance: int
    computed: int
    reference: int
    documented: bool


def diff_column(computed: tuple[int, ...], ref: ReferenceColumn) -> list[CellDiff]:
    width = max(len(computed), len(ref.counts))
    diffs = []
    for d in range(width):
        ours = computed[d] if d < len(computed) else 0
        theirs = ref.counts[d] if d < len(ref.counts) else 0
        if ours != theirs:
            diffs.append(CellDiff(d, ours, theirs, d in ref.flagged))
    return diffs
