"""Boolean-function representations: truth tables, algebraic normal form, cubes, ESOPs.

A single bit convention is used throughout the toolkit: variable x0 occupies
the most significant bit of a state or monomial index, so index i spells the
assignment x0 x1 ... x{n-1} when written in binary from the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

MAX_VARS = 16


def bit_of(value: int, wire: int, n: int) -> int:
    """Bit of `value` on wire `wire` under the x0-is-MSB convention."""
    return (value >> (n - 1 - wire)) & 1


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {n}")


@dataclass(frozen=True)
class TruthTable:
    """Single-output n-variable function as 2^n bits, position i = f(i)."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        _check_width(self.n)
        bits = tuple(int(b) for b in self.bits)
        if len(bits) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("truth table entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "TruthTable":
        bits = tuple(int(c) for c in text.strip())
        size = len(bits)
        if size < 2 or size & (size - 1):
            raise ValueError(f"truth table length must be a power of two >= 2, got {size}")
        return cls(size.bit_length() - 1, bits)

    def value(self, assignment: int) -> int:
        return self.bits[assignment]

    def to_mask(self) -> int:
        """Pack the bits into an integer, assignment a at bit position a."""
        mask = 0
        for a, b in enumerate(self.bits):
            mask |= b << a
        return mask

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class AnfVector:
    """XOR-polynomial coefficients: coeff j = 1 keeps the monomial over the set bits of j."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_width(self.n)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} coefficients, got {len(coeffs)}")
        if any(c not in (0, 1) for c in coeffs):
            raise ValueError("coefficients must be 0 or 1")
        object.__setattr__(self, "coeffs", coeffs)

    def monomials(self) -> list[int]:
        return [j for j, c in enumerate(self.coeffs) if c]


def _butterfly(values: tuple[int, ...], n: int) -> tuple[int, ...]:
    # In-place subset XOR transform, O(n 2^n); self-inverse over GF(2).
    out = list(values)
    for i in range(n):
        step = 1 << i
        for j in range(1 << n):
            if j & step:
                out[j] ^= out[j ^ step]
    return tuple(out)


def anf_transform(tt: TruthTable) -> AnfVector:
    """Coefficients of the XOR-of-monomials form of `tt`.

    The monomial for index j multiplies the variables whose bits are set in j
    (x0 at the MSB), and it evaluates to 1 at assignment a exactly when
    j & a == j.
    """
    return AnfVector(tt.n, _butterfly(tt.bits, tt.n))


def anf_to_truth_table(anf: AnfVector) -> TruthTable:
    """Inverse of anf_transform (the transform is an involution)."""
    return TruthTable(anf.n, _butterfly(anf.coeffs, anf.n))


@dataclass(frozen=True)
class Cube:
    """Product term: one symbol per variable, '1' positive, '0' negated, '-' absent."""

    literals: str

    def __post_init__(self):
        _check_width(len(self.literals))
        if any(c not in "-01" for c in self.literals):
            raise ValueError(f"cube symbols must be -, 0 or 1: {self.literals!r}")

    @property
    def n(self) -> int:
        return len(self.literals)

    def control_count(self) -> int:
        return sum(1 for c in self.literals if c != "-")

    def __str__(self) -> str:
        return self.literals


@dataclass(frozen=True)
class Esop:
    """Ordered XOR of cubes; duplicates are allowed and cancel pairwise."""

    n: int
    cubes: tuple[Cube, ...]

    def __post_init__(self):
        _check_width(self.n)
        cubes = tuple(c if isinstance(c, Cube) else Cube(c) for c in self.cubes)
        if any(c.n != self.n for c in cubes):
            raise ValueError("all cubes must have the ESOP's width")
        object.__setattr__(self, "cubes", cubes)

    def __len__(self) -> int:
        return len(self.cubes)


def eval_cube(cube: Cube, assignment: int) -> int:
    """1 iff every non-'-' literal matches the assignment bit."""
    n = cube.n
    for k, sym in enumerate(cube.literals):
        if sym == "-":
            continue
        if bit_of(assignment, k, n) != (sym == "1"):
            return 0
    return 1


def eval_esop(esop: Esop, assignment: int) -> int:
    value = 0
    for cube in esop.cubes:
        value ^= eval_cube(cube, assignment)
    return value


def cube_minterm_mask(cube: Cube) -> int:
    """Covered assignments packed into an integer (assignment a at bit a)."""
    n = cube.n
    mask = (1 << (1 << n)) - 1
    for k, sym in enumerate(cube.literals):
        if sym == "-":
            continue
        want = 1 if sym == "1" else 0
        wire_mask = 0
        for a in range(1 << n):
            if bit_of(a, k, n) == want:
                wire_mask |= 1 << a
        mask &= wire_mask
    return mask


def esop_to_truth_table(esop: Esop) -> TruthTable:
    size = 1 << esop.n
    return TruthTable(esop.n, tuple(eval_esop(esop, a) for a in range(size)))


def all_cubes(n: int) -> list[Cube]:
    """All 3^n cubes in lexicographic order with '-' < '0' < '1'."""
    return [Cube("".join(p)) for p in product("-01", repeat=n)]


def anf_to_esop(anf: AnfVector) -> Esop:
    """Positive-polarity ESOP: one cube per set coefficient, '1' on present variables."""
    n = anf.n
    cubes = []
    for j in anf.monomials():
        lits = "".join("1" if bit_of(j, k, n) else "-" for k in range(n))
        cubes.append(Cube(lits))
    return Esop(n, tuple(cubes))


def intersect_cubes(a: Cube, b: Cube) -> Cube | None:
    """Literal-wise product of two cubes; None when a 0/1 conflict empties it."""
    out = []
    for x, y in zip(a.literals, b.literals):
        if x == "-":
            out.append(y)
        elif y == "-" or x == y:
            out.append(x)
        else:
            return None
    return Cube("".join(out))


def sop_to_esop(cubes: list[Cube]) -> Esop:
    """ESOP equivalent to the inclusive-OR of `cubes`.

    Folds a + b = a xor b xor ab left to right; conflicting products drop out.
    No cancellation pass is applied, so m input cubes can yield up to 2^m - 1
    terms.
    """
    if not cubes:
        raise ValueError("need at least one cube")
    n = cubes[0].n
    if any(c.n != n for c in cubes):
        raise ValueError("cubes must share one width")
    terms: list[Cube] = [cubes[0]]
    for cube in cubes[1:]:
        products = [p for p in (intersect_cubes(t, cube) for t in terms) if p is not None]
        terms = terms + [cube] + products
    return Esop(n, tuple(terms))


def cancel_duplicates(esop: Esop) -> Esop:
    """Normalization pass: drop cube pairs that appear an even number of times."""
    counts: dict[Cube, int] = {}
    for cube in esop.cubes:
        counts[cube] = counts.get(cube, 0) + 1
    kept = tuple(cube for cube in sorted(counts, key=str) if counts[cube] % 2)
    return Esop(esop.n, kept)
