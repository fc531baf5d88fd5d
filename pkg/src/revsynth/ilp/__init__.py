from revsynth.ilp.encode import EncodingSpec, build_model, decode_solution
from revsynth.ilp.lpformat import emit_lp, parse_lp
from revsynth.ilp.model import Constraint, IlpModel
from revsynth.ilp.solver import SolveResult, solve_naive

__all__ = [
    "Constraint",
    "EncodingSpec",
    "IlpModel",
    "SolveResult",
    "build_model",
    "decode_solution",
    "emit_lp",
    "parse_lp",
    "solve_naive",
]
