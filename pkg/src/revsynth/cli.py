"""Command-line front end.

Exit codes: 0 success, 1 domain errors (infeasible, unreachable, budget),
2 usage errors. All reports are deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import os
import sys

from revsynth.core.boolfunc import TruthTable, anf_to_esop, anf_transform
from revsynth.core.fileio import (
    format_circuit,
    format_esops,
    format_permutation,
    parse_circuit,
    parse_esops,
    parse_function,
)
from revsynth.core.gates import Circuit, GateKind, Permutation, simulate_circuit, verify_circuit
from revsynth.core.library import GateLibrary, default_cost_model
from revsynth.errors import FormatError, RevsynthError
from revsynth.esop.compile import check_esop_circuit, esop_to_circuit
from revsynth.esop.coverage import build_coverage_matrix
from revsynth.esop.minimize import exact_esop_minimize
from revsynth.ilp.encode import EncodingSpec, build_model, decode_solution
from revsynth.ilp.lpformat import emit_lp
from revsynth.ilp.solver import solve_naive
from revsynth.pathsynth.census import census
from revsynth.pathsynth.synth import synthesize_optimal
from revsynth.reference import COLUMN_ORDER, diff_column, load_reference
from revsynth.sortsynth import cycle_decompose, synthesize_by_sorting


def _read_maybe_file(value: str) -> str:
    if os.path.isfile(value):
        with open(value) as fh:
            return fh.read()
    return value


def _load_function(value: str):
    """File path, a full `perm n:`/`tt n:` line, or bare inline values."""
    text = _read_maybe_file(value).strip()
    if "\n" in text or ":" in text:
        return parse_function(text)
    tokens = text.split()
    if len(tokens) == 1 and set(tokens[0]) <= {"0", "1"}:
        return TruthTable.from_string(tokens[0])
    values = [int(t) for t in tokens]
    n = (len(values) - 1).bit_length()
    if len(values) != 1 << n:
        raise FormatError(f"{len(values)} values is not a power of two")
    return Permutation(n, tuple(values))


def _as_permutation(value: str) -> Permutation:
    fn = _load_function(value)
    if not isinstance(fn, Permutation):
        raise FormatError("expected a permutation, got a truth table")
    return fn


def _as_truth_table(value: str) -> TruthTable:
    fn = _load_function(value)
    if not isinstance(fn, TruthTable):
        raise FormatError("expected a truth table, got a permutation")
    return fn


def _load_circuit(value: str) -> Circuit:
    return parse_circuit(_read_maybe_file(value))


def _library(args) -> GateLibrary:
    return GateLibrary.from_spec(args.lib, args.polarity == "mixed")


def _cost_model(args):
    model = default_cost_model()
    for spec in getattr(args, "cost", None) or []:
        try:
            head, value = spec.split("=", 1)
            kind_name, controls = head.split(":", 1)
            kind = {"tof": GateKind.TOF, "fred": GateKind.FRED,
                    "peres": GateKind.PERES, "speres": GateKind.PERES_INV}[kind_name.lower()]
            model = model.with_override(kind, int(controls), int(value))
        except (ValueError, KeyError) as exc:
            raise FormatError(f"bad --cost entry {spec!r}; use kind:controls=value") from exc
    return model


def _write_or_print(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_circuit(circuit: Circuit, out: str | None):
    _write_or_print(format_circuit(circuit), out)


def _cmd_anf(args) -> int:
    tt = _as_truth_table(args.tt)
    anf = anf_transform(tt)
    print(f"anf {tt.n}: " + "".join(str(c) for c in anf.coeffs))
    for cube in anf_to_esop(anf).cubes:
        print(cube)
    return 0


def _cmd_esop_min(args) -> int:
    if args.tt:
        tables = [_as_truth_table(args.tt)]
    else:
        tables = _as_permutation(args.perm).output_truth_tables()
    esops = [exact_esop_minimize(tt, cube_budget=args.budget, objective=args.objective,
                                 cost_model=_cost_model(args))
             for tt in tables]
    _write_or_print(format_esops(esops), args.out)
    return 0


def _cmd_compile_esop(args) -> int:
    text = _read_maybe_file(args.esop)
    esops = parse_esops(text)
    n = esops[0].n
    circuit = esop_to_circuit(esops, n)
    if not check_esop_circuit(circuit, esops, n):
        raise RevsynthError("internal error: compiled circuit failed verification")
    _emit_circuit(circuit, args.out)
    return 0


def _cmd_coverage(args) -> int:
    tt = _as_truth_table(args.tt)
    matrix = build_coverage_matrix(tt)
    names = [str(c) for c in matrix.cubes]
    if args.format == "tsv":
        print("\t".join(["cube"] + names))
        for cube in matrix.cubes:
            print("\t".join([str(cube)] + [str(v) for v in matrix.row(cube)]))
    else:
        width = max(len(s) for s in names) + 1
        print(" " * (width + 1) + " ".join(f"{s:>{width}}" for s in names))
        for cube in matrix.cubes:
            row = " ".join(f"{v:>{width}}" for v in matrix.row(cube))
            print(f"{str(cube):>{width}}  {row}")
    print("on-columns: " + " ".join(sorted(str(c) for c in matrix.on_columns)))
    return 0


def _cmd_census(args) -> int:
    lib = _library(args)
    table = census(args.n, lib, args.objective,
                   _cost_model(args) if args.objective == "qc" else None)
    for line in table.report_lines(args.format):
        print(line)
    return 0


def _write_circuit_for(circuit: Circuit, perm: Permutation, out: str | None):
    """Emit a circuit; written files record the realized permutation and are
    re-read and verified before the command reports success."""
    text = format_circuit(circuit)
    if out:
        text += f"# realizes: {format_permutation(perm)}"
        with open(out, "w") as fh:
            fh.write(text)
        if not verify_circuit(parse_circuit(open(out).read()), perm):
            raise RevsynthError("internal error: written circuit failed verification")
    else:
        sys.stdout.write(text)


def _cmd_synth(args) -> int:
    perm = _as_permutation(args.perm)
    result = synthesize_optimal(perm, _library(args), args.objective,
                                _cost_model(args) if args.objective == "qc" else None,
                                state_budget=args.state_budget)
    _write_circuit_for(result.circuit, perm, args.out)
    label = "gates" if args.objective == "gates" else "qc"
    print(f"{label} {result.distance}")
    return 0


def _cmd_sort_synth(args) -> int:
    perm = _as_permutation(args.perm)
    if args.emit_cycles:
        print("cycles " + str(cycle_decompose(perm)))
    circuit = synthesize_by_sorting(perm, greedy=args.greedy)
    _write_circuit_for(circuit, perm, args.out)
    print(f"gates {len(circuit)}")
    return 0


def _cmd_ilp(args) -> int:
    perm = _as_permutation(args.perm)
    families = {"tof": ("tof",), "fred": ("fred",), "both": ("tof", "fred")}[args.families]
    depth = args.depth if args.depth is not None else (8 if perm.n == 3 else 2 * (1 << perm.n))
    spec = EncodingSpec(perm, depth, families, args.objective)
    model = build_model(spec, _cost_model(args))
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(emit_lp(model))
        print(f"wrote {args.emit} ({len(model.variables)} binaries, "
              f"{len(model.constraints)} constraints)")
    if not args.solve_naive:
        return 0
    result = solve_naive(model, node_limit=args.node_limit, time_limit=args.time_limit)
    if result.status == "infeasible":
        print("infeasible")
        return 1
    if result.status == "limit":
        if result.objective is not None:
            print(f"limit-exhausted incumbent {result.objective}")
        else:
            print("limit-exhausted")
        return 1
    circuit = decode_solution(spec, result.assignment)
    if not verify_circuit(circuit, perm):
        raise RevsynthError("internal error: decoded circuit failed verification")
    sys.stdout.write(format_circuit(circuit))
    print(f"objective {result.objective}")
    return 0


def _cmd_simulate(args) -> int:
    circuit = _load_circuit(args.circuit)
    sys.stdout.write(format_permutation(simulate_circuit(circuit)))
    return 0


def _cmd_verify(args) -> int:
    circuit = _load_circuit(args.circuit)
    perm = _as_permutation(args.perm)
    if verify_circuit(circuit, perm):
        print("OK")
        return 0
    print("MISMATCH")
    return 1


def _cmd_reproduce(args) -> int:
    objective = {"gc": "gates", "qc": "qc"}[args.which]
    reference = load_reference(objective)
    tables = {}
    for lib_name, pol in COLUMN_ORDER:
        lib = GateLibrary.from_spec(lib_name, pol == "+/-")
        tables[(lib_name, pol)] = census(3, lib, objective)
    if args.format == "tsv":
        for key in COLUMN_ORDER:
            for line in tables[key].report_lines("tsv"):
                print(line)
    else:
        # Grid: one row per distance, one column per (library, polarity).
        labels = [f"{name}/{pol}" for name, pol in COLUMN_ORDER]
        width = max(8, max(len(s) for s in labels) + 1)
        depth = max(len(t.counts) for t in tables.values())
        head = "gc" if args.which == "gc" else "qc"
        print(f"{head:>5} " + "".join(f"{s:>{width}}" for s in labels))
        for d in range(depth):
            row = [tables[key].counts[d] if d < len(tables[key].counts) else 0
                   for key in COLUMN_ORDER]
            print(f"{d:>5} " + "".join(f"{v:>{width}}" for v in row))
        print(f"{'avg':>5} " + "".join(f"{tables[key].average_str:>{width}}"
                                       for key in COLUMN_ORDER))
    documented = mismatched = 0
    for lib_name, pol in COLUMN_ORDER:
        diffs = diff_column(tables[(lib_name, pol)].counts, reference[(lib_name, pol)])
        for cell in diffs:
            kind = "documented discrepancy" if cell.documented else "MISMATCH"
            print(f"{kind} {lib_name} {pol} d={cell.distance} "
                  f"computed={cell.computed} reference={cell.reference}")
            if cell.documented:
                documented += 1
            else:
                mismatched += 1
        if not diffs and args.format != "tsv":
            print(f"reference match {lib_name} {pol}")
    print(f"summary: {len(COLUMN_ORDER)} columns, {mismatched} mismatches, "
          f"{documented} documented discrepancies")
    return 0


def _add_function_opts(parser, perm=True, tt=True, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    if tt:
        group.add_argument("--tt", help="truth table: bits, a 'tt n: ...' line, or a file")
    if perm:
        group.add_argument("--perm", help="permutation: images, a 'perm n: ...' line, or a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revsynth",
        description="Exact reversible-logic synthesis: ESOP minimization, optimal "
                    "shortest-path search, sorting-based synthesis, and a 0-1 ILP encoding.")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker hint for compiled kernels (results never depend on it)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("anf", help="positive-polarity canonical form of a truth table")
    _add_function_opts(p, perm=False)
    p.set_defaults(func=_cmd_anf)

    p = sub.add_parser("esop-min", help="exact minimum-cube (or minimum-cost) ESOP")
    _add_function_opts(p)
    p.add_argument("--budget", type=int, default=None, help="cube budget (error if exceeded)")
    p.add_argument("--objective", choices=["cubes", "qc"], default="cubes")
    p.add_argument("--cost", action="append", help="cost override kind:controls=value")
    p.add_argument("--out", help="write esop file instead of stdout")
    p.set_defaults(func=_cmd_esop_min)

    p = sub.add_parser("compile-esop", help="compile an esop file to a bounded-ancilla circuit")
    p.add_argument("--esop", required=True, help="esop text or file")
    p.add_argument("--out", help="write circuit file instead of stdout")
    p.set_defaults(func=_cmd_compile_esop)

    p = sub.add_parser("coverage", help="signed cube coverage matrix of a function")
    _add_function_opts(p, perm=False)
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.set_defaults(func=_cmd_coverage)

    p = sub.add_parser("census", help="exhaustive optimal-distance histogram")
    p.add_argument("-n", type=int, required=True, help="line count (exhaustive cap: 3)")
    p.add_argument("--lib", default="nct", help="gate families, e.g. nct, ncf, nctf, nctpf")
    p.add_argument("--polarity", choices=["pos", "mixed"], default="pos")
    p.add_argument("--objective", choices=["gates", "qc"], default="gates")
    p.add_argument("--cost", action="append", help="cost override kind:controls=value")
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("synth", help="optimal circuit for a permutation")
    _add_function_opts(p, tt=False)
    p.add_argument("--lib", default="nct")
    p.add_argument("--polarity", choices=["pos", "mixed"], default="pos")
    p.add_argument("--objective", choices=["gates", "qc"], default="gates")
    p.add_argument("--cost", action="append", help="cost override kind:controls=value")
    p.add_argument("--state-budget", type=int, default=2_000_000,
                   help="stored-state cap for width-4 bidirectional queries")
    p.add_argument("--out", help="write circuit file instead of stdout")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("sort-synth", help="constructive synthesis by transposition sorting")
    _add_function_opts(p, tt=False)
    p.add_argument("--greedy", action="store_true",
                   help="pick the cheapest available transposition instead of the cycle schema")
    p.add_argument("--emit-cycles", action="store_true",
                   help="print the canonical cycle decomposition first")
    p.add_argument("--out", help="write circuit file instead of stdout")
    p.set_defaults(func=_cmd_sort_synth)

    p = sub.add_parser("ilp", help="0-1 model for fixed-depth synthesis")
    _add_function_opts(p, tt=False)
    p.add_argument("--depth", type=int, default=None, help="stage bound D (default 8 for n=3)")
    p.add_argument("--objective", choices=["gates", "qc"], default="gates")
    p.add_argument("--families", choices=["tof", "fred", "both"], default="tof")
    p.add_argument("--cost", action="append", help="cost override kind:controls=value")
    p.add_argument("--emit", help="write the model in LP format")
    p.add_argument("--solve-naive", action="store_true", help="run the reference solver")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None)
    p.set_defaults(func=_cmd_ilp)

    p = sub.add_parser("simulate", help="permutation computed by a circuit file")
    p.add_argument("--circuit", required=True, help="circuit text or file")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="check a circuit against a permutation")
    p.add_argument("--circuit", required=True, help="circuit text or file")
    p.add_argument("--perm", required=True, help="permutation: images, a line, or a file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reproduce", help="recompute the bundled reference census tables")
    p.add_argument("which", choices=["gc", "qc"])
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads > 0:
        try:  # purely a hint; kernels are sequential today
            import numba

            numba.set_num_threads(min(args.threads, numba.get_num_threads()))
        except ImportError:
            pass
    try:
        return args.func(args)
    except RevsynthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
