from revsynth.esop.compile import check_esop_circuit, esop_to_circuit
from revsynth.esop.coverage import (
    CoverageMatrix,
    build_coverage_matrix,
    coverage_matrix_from_on_set,
    coverage_matrix_of_snf,
)
from revsynth.esop.minimize import (
    anf_cube_count,
    esop_fits_within,
    exact_esop_minimize,
    minterm_parity_instance,
)
from revsynth.esop.snf import SnfSet, snf_expand_cube, snf_of_esop, snf_of_function
from revsynth.esop.xorcover import (
    XorCoverInstance,
    exact_cover_via_xor_oracle,
    min_xor_cover,
    xor_cover_decide,
    xor_cover_verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
