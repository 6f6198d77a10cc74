from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from src.commons.exceptions import InvalidObjectError


@dataclass(frozen=True)
class StirlingPerm:
    """
    b-Stirling permutation of size n.

    Every value in [1, n] appears exactly b times and any value found between
    two copies of i is larger than i.
    """

    b: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.b < 1:
            raise InvalidObjectError(f"Multiplicity must be positive, got {self.b}")
        if len(self.entries) % self.b:
            raise InvalidObjectError(
                f"Length {len(self.entries)} is not a multiple of b={self.b}"
            )
        counts = Counter(self.entries)
        expected = set(range(1, self.n + 1))
        if set(counts) != expected or any(c != self.b for c in counts.values()):
            raise InvalidObjectError(
                f"{self} must use each of 1..{self.n} exactly {self.b} times"
            )
        first = {}
        last = {}
        for pos, value in enumerate(self.entries):
            first.setdefault(value, pos)
            last[value] = pos
        for value in expected:
            if any(x < value for x in self.entries[first[value]:last[value]]):
                raise InvalidObjectError(f"{self} breaks the nesting rule at value {value}")

    @property
    def n(self) -> int:
        return len(self.entries) // self.b

    @classmethod
    def parse(cls, text: str, b: int) -> StirlingPerm:
        """Digits for n ≤ 9, comma-separated integers otherwise."""
        text = text.strip()
        try:
            if "," in text or " " in text:
                entries = tuple(int(x) for x in text.replace(",", " ").split())
            else:
                entries = tuple(int(ch) for ch in text)
        except ValueError:
            raise InvalidObjectError(f"Cannot read a Stirling permutation from {text!r}")
        return cls(b=b, entries=entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        if self.entries and max(self.entries) > 9:
            return ",".join(map(str, self.entries))
        return "".join(map(str, self.entries))
