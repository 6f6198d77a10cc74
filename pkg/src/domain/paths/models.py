from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from src.commons.exceptions import InvalidObjectError

NORTH = "N"
EAST = "E"

Point = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Slope:
    """Relatively prime positive integers (a, b): paths stay weakly above y = a·x/b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidObjectError(f"Slope entries must be positive, got ({self.a},{self.b})")
        if gcd(self.a, self.b) != 1:
            raise InvalidObjectError(f"Slope ({self.a},{self.b}) is not coprime")

    @property
    def dual(self) -> Slope:
        return Slope(self.b, self.a)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


ONE_ONE = Slope(1, 1)


@dataclass(frozen=True)
class DyckWord:
    """
    An (a,b)-Dyck path of size n written over {N, E}.

    Invariants: a·n letters N, b·n letters E, and every prefix satisfies
    b·#N ≥ a·#E.
    """

    slope: Slope
    n: int
    steps: str

    def __post_init__(self):
        a, b = self.slope.a, self.slope.b
        if self.n < 0:
            raise InvalidObjectError(f"Size must be non-negative, got {self.n}")
        if len(self.steps) != (a + b) * self.n:
            raise InvalidObjectError(
                f"Word of length {len(self.steps)} cannot have size {self.n} at slope {self.slope}"
            )
        north = east = 0
        for pos, step in enumerate(self.steps):
            if step == NORTH:
                north += 1
            elif step == EAST:
                east += 1
            else:
                raise InvalidObjectError(f"Unexpected letter {step!r} at position {pos + 1}")
            if b * north < a * east:
                raise InvalidObjectError(
                    f"{self.steps} goes below the line at position {pos + 1}"
                )
        if north != a * self.n:
            raise InvalidObjectError(f"{self.steps} needs {a * self.n} N steps, has {north}")

    @classmethod
    def parse(cls, text: str, slope: Slope = ONE_ONE) -> DyckWord:
        steps = text.strip().upper()
        width = slope.a + slope.b
        if len(steps) % width:
            raise InvalidObjectError(
                f"Word of length {len(steps)} is not a multiple of a+b={width}"
            )
        return cls(slope=slope, n=len(steps) // width, steps=steps)

    @classmethod
    def dyck11(cls, text: str) -> DyckWord:
        """Lee una palabra de Dyck clásica, aceptando también '(' y ')'."""
        steps = text.strip().replace("(", NORTH).replace(")", EAST)
        return cls.parse(steps, ONE_ONE)

    def points(self) -> List[Point]:
        x = y = 0
        pts = [(0, 0)]
        for step in self.steps:
            if step == NORTH:
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    def as_parens(self) -> str:
        return self.steps.replace(NORTH, "(").replace(EAST, ")")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps
