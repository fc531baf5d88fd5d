"""Pure 0-1 linear model: named binary variables, integer linear constraints,
and a minimized integer linear objective."""

from __future__ import annotations

from typing import Iterable, NamedTuple


class Constraint(NamedTuple):
    name: str
    terms: tuple[tuple[int, str], ...]
    sense: str  # one of '<=', '>=', '='
    rhs: int


class IlpModel:
    def __init__(self):
        self.variables: list[str] = []
        self._var_index: dict[str, int] = {}
        self.constraints: list[Constraint] = []
        self.objective: list[tuple[int, str]] = []

    def add_binary(self, name: str) -> str:
        if name in self._var_index:
            raise ValueError(f"variable {name!r} already declared")
        self._var_index[name] = len(self.variables)
        self.variables.append(name)
        return name

    def has_variable(self, name: str) -> bool:
        return name in self._var_index

    def _canonical_terms(self, terms: Iterable[tuple[int, str]]) -> tuple[tuple[int, str], ...]:
        combined: dict[str, int] = {}
        for coef, var in terms:
            if var not in self._var_index:
                raise ValueError(f"constraint references undeclared variable {var!r}")
            combined[var] = combined.get(var, 0) + int(coef)
        ordered = sorted(combined.items(), key=lambda kv: self._var_index[kv[0]])
        return tuple((coef, var) for var, coef in ordered if coef != 0)

    def add_constraint(self, terms: Iterable[tuple[int, str]], sense: str, rhs: int,
                       name: str | None = None) -> Constraint:
        if sense not in ("<=", ">=", "="):
            raise ValueError(f"bad sense {sense!r}")
        if name is None:
            name = f"c{len(self.constraints) + 1}"
        con = Constraint(name, self._canonical_terms(terms), sense, int(rhs))
        self.constraints.append(con)
        return con

    def add_objective_term(self, coef: int, var: str) -> None:
        if var not in self._var_index:
            raise ValueError(f"objective references undeclared variable {var!r}")
        if coef:
            self.objective.append((int(coef), var))

    def objective_value(self, assignment: dict[str, int]) -> int:
        return sum(coef * assignment[var] for coef, var in self.objective)

    def _key(self):
        obj: dict[str, int] = {}
        for coef, var in self.objective:
            obj[var] = obj.get(var, 0) + coef
        return (
            tuple(self.variables),
            tuple((c.terms, c.sense, c.rhs) for c in self.constraints),
            tuple(sorted((v, c) for v, c in obj.items() if c)),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, IlpModel):
            return NotImplemented
        return self._key() == other._key()

    def __repr__(self) -> str:
        return (f"IlpModel({len(self.variables)} binaries, "
                f"{len(self.constraints)} constraints)")
