from revsynth.pathsynth.census import CensusTable, census, distance_table, gate_permutations
from revsynth.pathsynth.indexer import PermutationIndexer
from revsynth.pathsynth.kernels import resolve_backend
from revsynth.pathsynth.synth import (
    SynthesisResult,
    distance_between,
    neighbors,
    synthesize_optimal,
)

__all__ = [
    "CensusTable",
    "PermutationIndexer",
    "SynthesisResult",
    "census",
    "distance_between",
    "distance_table",
    "gate_permutations",
    "neighbors",
    "resolve_backend",
    "synthesize_optimal",
]
