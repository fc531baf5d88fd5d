"""LP text emitter and round-trip parser.

Standard sectioned layout: Minimize / Subject To / Binary / End. Variable
and constraint order is the declaration order, so emitting is deterministic
and parse(emit(m)) == m.
"""

from __future__ import annotations

from revsynth.errors import FormatError
from revsynth.ilp.model import IlpModel


def _format_terms(terms) -> str:
    if not terms:
        return ""
    parts = []
    for idx, (coef, var) in enumerate(terms):
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = var if mag == 1 else f"{mag} {var}"
        if idx == 0:
            parts.append(body if coef > 0 else f"- {body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def emit_lp(model: IlpModel) -> str:
    out = ["Minimize"]
    out.append(f" obj: {_format_terms(tuple(model.objective))}".rstrip())
    out.append("Subject To")
    for con in model.constraints:
        out.append(f" {con.name}: {_format_terms(con.terms)} {con.sense} {con.rhs}")
    if model.variables:
        out.append("Binary")
        for var in model.variables:
            out.append(f" {var}")
    out.append("End")
    return "\n".join(out) + "\n"


def _parse_terms(text: str) -> list[tuple[int, str]]:
    tokens = text.replace("+", " + ").replace("-", " - ").split()
    terms = []
    sign = 1
    pending_coef: int | None = None
    for tok in tokens:
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        elif tok.isdigit():
            if pending_coef is not None:
                raise FormatError(f"two coefficients in a row near {text!r}")
            pending_coef = int(tok)
        else:
            coef = sign * (pending_coef if pending_coef is not None else 1)
            terms.append((coef, tok))
            sign = 1
            pending_coef = None
    if pending_coef is not None:
        raise FormatError(f"dangling coefficient in {text!r}")
    return terms


def parse_lp(text: str) -> IlpModel:
    model = IlpModel()
    section = None
    objective: list[tuple[int, str]] = []
    pending: list[tuple[str, list[tuple[int, str]], str, int]] = []
    for raw in text.splitlines():
        line = raw.split("\\", 1)[0].strip()
        if not line:
            continue
        lowered = line.lower()
        if lowered in ("minimize", "subject to", "binary", "end"):
            section = lowered
            continue
        if section == "minimize":
            if ":" in line:
                line = line.split(":", 1)[1].strip()
            objective.extend(_parse_terms(line))
        elif section == "subject to":
            if ":" not in line:
                raise FormatError(f"constraint line needs a name: {line!r}")
            name, body = (part.strip() for part in line.split(":", 1))
            for sense in (">=", "<=", "="):
                if sense in body:
                    lhs, rhs = body.split(sense, 1)
                    pending.append((name, _parse_terms(lhs), sense, int(rhs.strip())))
                    break
            else:
                raise FormatError(f"constraint without relation: {line!r}")
        elif section == "binary":
            model.add_binary(line)
        elif section is None:
            raise FormatError(f"content before any section: {line!r}")
    for name, terms, sense, rhs in pending:
        model.add_constraint(terms, sense, rhs, name=name)
    for coef, var in objective:
        model.add_objective_term(coef, var)
    return model
