from revsynth.core.boolfunc import (
    AnfVector,
    Cube,
    Esop,
    TruthTable,
    all_cubes,
    anf_to_esop,
    anf_to_truth_table,
    anf_transform,
    bit_of,
    cancel_duplicates,
    cube_minterm_mask,
    esop_to_truth_table,
    eval_cube,
    eval_esop,
    intersect_cubes,
    sop_to_esop,
)
from revsynth.core.gates import (
    Circuit,
    ControlLiteral,
    Gate,
    GateKind,
    Permutation,
    apply_gate,
    fred,
    invert_gate,
    peres,
    simulate_circuit,
    tof,
    verify_circuit,
)
from revsynth.core.library import (
    NCF,
    NCT,
    NCTF,
    NCTPF,
    CostModel,
    GateLibrary,
    circuit_cost,
    default_cost_model,
    enumerate_gates,
    gate_cost,
)

__all__ = [name for name in dir() if not name.startswith("_")]
