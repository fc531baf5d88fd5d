"""Text formats for circuits, functions, and ESOPs.

Circuit files:
    lines <n>
    TOF x2 : x0+ x1-
    FRED x1 x2 : x0+
    PERES x0+ x1+ x2
    SPERES x0+ x1+ x2
'#' starts a comment, blank lines are ignored, a bare wire token means a
positive control. SPERES is the reversed-order Peres.

Function files: `perm <n>: v0 v1 ...` or `tt <n>: <2^n chars of 0/1>`.
ESOP files: `vars <n>` then one cube per line, optionally `| <output-index>`.
"""

from __future__ import annotations

from revsynth.core.boolfunc import Cube, Esop, TruthTable
from revsynth.core.gates import Circuit, ControlLiteral, Gate, GateKind, Permutation
from revsynth.errors import FormatError


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_wire(token: str, allow_polarity: bool) -> tuple[int, bool]:
    positive = True
    if token.endswith(("+", "-")):
        if not allow_polarity:
            raise FormatError(f"polarity not allowed on {token!r}")
        positive = token.endswith("+")
        token = token[:-1]
    if not token.startswith("x") or not token[1:].isdigit():
        raise FormatError(f"bad wire token {token!r}")
    return int(token[1:]), positive


def _wire_name(line: int, positive: bool | None = None) -> str:
    name = f"x{line}"
    if positive is None:
        return name
    return name + ("+" if positive else "-")


def parse_circuit(text: str) -> Circuit:
    lines = _content_lines(text)
    if not lines or lines[0].split()[0] != "lines":
        raise FormatError("circuit file must start with a 'lines <n>' header")
    header = lines[0].split()
    if len(header) != 2 or not header[1].isdigit():
        raise FormatError(f"bad header {lines[0]!r}")
    n = int(header[1])
    gates = []
    for line in lines[1:]:
        if ":" in line:
            head, tail = line.split(":", 1)
            ctrl_tokens = tail.split()
        else:
            head, ctrl_tokens = line, []
        tokens = head.split()
        kind = tokens[0].upper()
        try:
            if kind == "TOF":
                (target,) = tokens[1:]
                t, _ = _parse_wire(target, allow_polarity=False)
                controls = [ControlLiteral(*_parse_wire(c, True)) for c in ctrl_tokens]
                gates.append(Gate(GateKind.TOF, (t,), tuple(controls)))
            elif kind == "FRED":
                t1_tok, t2_tok = tokens[1:]
                t1, _ = _parse_wire(t1_tok, allow_polarity=False)
                t2, _ = _parse_wire(t2_tok, allow_polarity=False)
                controls = [ControlLiteral(*_parse_wire(c, True)) for c in ctrl_tokens]
                gates.append(Gate(GateKind.FRED, (t1, t2), tuple(controls)))
            elif kind in ("PERES", "SPERES"):
                if ctrl_tokens:
                    raise FormatError("Peres lines take no control list")
                # Optional fourth token: the CNOT half's control literal,
                # when its polarity differs from p's TOF polarity.
                if len(tokens) == 5:
                    p_tok, q_tok, r_tok, c_tok = tokens[1:]
                elif len(tokens) == 4:
                    p_tok, q_tok, r_tok = tokens[1:]
                    c_tok = None
                else:
                    raise FormatError("Peres lines take wires p q r [p-of-cnot]")
                p, p_pos = _parse_wire(p_tok, allow_polarity=True)
                q, q_pos = _parse_wire(q_tok, allow_polarity=True)
                r, _ = _parse_wire(r_tok, allow_polarity=False)
                if c_tok is None:
                    c_pos = p_pos
                else:
                    c_line, c_pos = _parse_wire(c_tok, allow_polarity=True)
                    if c_line != p:
                        raise FormatError("the CNOT control must be wire p")
                gate_kind = GateKind.PERES if kind == "PERES" else GateKind.PERES_INV
                gates.append(Gate(gate_kind, (q, r),
                                  (ControlLiteral(p, p_pos), ControlLiteral(q, q_pos)),
                                  cnot_positive=c_pos))
            else:
                raise FormatError(f"unknown gate kind {kind!r}")
        except (ValueError, FormatError) as exc:
            raise FormatError(f"bad gate line {line!r}: {exc}") from exc
    try:
        return Circuit(n, tuple(gates))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_circuit(circuit: Circuit) -> str:
    out = [f"lines {circuit.n}"]
    for g in circuit.gates:
        if g.kind is GateKind.TOF:
            ctrls = " ".join(_wire_name(c.line, c.positive) for c in g.controls)
            out.append(f"TOF {_wire_name(g.targets[0])} : {ctrls}".rstrip())
        elif g.kind is GateKind.FRED:
            ctrls = " ".join(_wire_name(c.line, c.positive) for c in g.controls)
            t1, t2 = g.targets
            out.append(f"FRED {_wire_name(t1)} {_wire_name(t2)} : {ctrls}".rstrip())
        else:
            word = "PERES" if g.kind is GateKind.PERES else "SPERES"
            p_lit, q_lit = g.controls
            q, r = g.targets
            line = (f"{word} {_wire_name(p_lit.line, p_lit.positive)} "
                    f"{_wire_name(q, q_lit.positive)} {_wire_name(r)}")
            if g.cnot_positive != p_lit.positive:
                line += f" {_wire_name(p_lit.line, g.cnot_positive)}"
            out.append(line)
    return "\n".join(out) + "\n"


def parse_function(text: str) -> TruthTable | Permutation:
    lines = _content_lines(text)
    if len(lines) != 1:
        raise FormatError("function file must hold exactly one 'perm' or 'tt' line")
    return parse_function_line(lines[0])


def parse_function_line(line: str) -> TruthTable | Permutation:
    if ":" not in line:
        raise FormatError(f"expected 'perm <n>:' or 'tt <n>:' in {line!r}")
    head, payload = line.split(":", 1)
    tokens = head.split()
    if len(tokens) != 2 or tokens[0] not in ("perm", "tt") or not tokens[1].isdigit():
        raise FormatError(f"bad function header {head!r}")
    kind, n = tokens[0], int(tokens[1])
    try:
        if kind == "perm":
            images = tuple(int(v) for v in payload.split())
            return Permutation(n, images)
        bits = "".join(payload.split())
        if len(bits) != 1 << n:
            raise ValueError(f"expected {1 << n} bits, got {len(bits)}")
        return TruthTable(n, tuple(int(c) for c in bits))
    except ValueError as exc:
        raise FormatError(f"bad function line {line!r}: {exc}") from exc


def format_permutation(perm: Permutation) -> str:
    return f"perm {perm.n}: " + " ".join(str(v) for v in perm.images) + "\n"


def format_truth_table(tt: TruthTable) -> str:
    return f"tt {tt.n}: {tt}\n"


def parse_esops(text: str) -> list[Esop]:
    """Cube lists grouped by output index (missing '|' means output 0)."""
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("vars"):
        raise FormatError("esop file must start with a 'vars <n>' header")
    header = lines[0].split()
    if len(header) != 2 or not header[1].isdigit():
        raise FormatError(f"bad header {lines[0]!r}")
    n = int(header[1])
    by_output: dict[int, list[Cube]] = {}
    max_out = 0
    for line in lines[1:]:
        if "|" in line:
            cube_text, idx_text = (part.strip() for part in line.split("|", 1))
            if not idx_text.isdigit():
                raise FormatError(f"bad output index in {line!r}")
            idx = int(idx_text)
        else:
            cube_text, idx = line.strip(), 0
        try:
            cube = Cube(cube_text)
        except ValueError as exc:
            raise FormatError(f"bad cube line {line!r}: {exc}") from exc
        if cube.n != n:
            raise FormatError(f"cube {cube_text!r} does not match vars {n}")
        by_output.setdefault(idx, []).append(cube)
        max_out = max(max_out, idx)
    return [Esop(n, tuple(by_output.get(i, ()))) for i in range(max_out + 1)]


def format_esops(esops: list[Esop]) -> str:
    if not esops:
        raise ValueError("need at least one output")
    n = esops[0].n
    out = [f"vars {n}"]
    for idx, esop in enumerate(esops):
        for cube in esop.cubes:
            out.append(f"{cube}" if len(esops) == 1 else f"{cube} | {idx}")
    return "\n".join(out) + "\n"
