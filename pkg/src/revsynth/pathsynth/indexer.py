"""Ranking permutations of {0..2^n-1} in the factorial number system."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PermutationIndexer:
    """Bijection between width-n permutations and ranks in [0, (2^n)!).

    Identity has rank 0; ranks follow lexicographic order of the image
    sequence (the Lehmer code).
    """

    n: int
    size: int = field(init=False)
    factorials: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("width must be at least 1")
        size = 1 << self.n
        fact = [1] * (size + 1)
        for i in range(1, size + 1):
            fact[i] = fact[i - 1] * i
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "factorials", tuple(fact))

    @property
    def count(self) -> int:
        return self.factorials[self.size]

    def rank(self, images) -> int:
        size = self.size
        if len(images) != size:
            raise ValueError(f"expected {size} images")
        rank = 0
        for i in range(size):
            smaller_after = 0
            for j in range(i + 1, size):
                if images[j] < images[i]:
                    smaller_after += 1
            rank += smaller_after * self.factorials[size - 1 - i]
        return rank

    def unrank(self, rank: int) -> tuple[int, ...]:
        if not 0 <= rank < self.count:
            raise ValueError(f"rank out of range: {rank}")
        size = self.size
        available = list(range(size))
        out = []
        for i in range(size):
            f = self.factorials[size - 1 - i]
            digit, rank = divmod(rank, f)
            out.append(available.pop(digit))
        return tuple(out)
