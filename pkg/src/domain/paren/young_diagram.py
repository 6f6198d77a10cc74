"""Interleaving of a tuple into one path and the hook lengths of its diagram."""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.domain.paren.models import DyckTuple
from src.domain.paths.models import NORTH

Partition = Tuple[int, ...]


@dataclass(frozen=True)
class CircledDiagram:
    word: str
    shape: Partition
    circled: Tuple[Tuple[int, int], ...]
    column_counts: Partition

    @property
    def transpose(self) -> Partition:
        return conjugate(self.column_counts)


def interleave(t: DyckTuple) -> str:
    """Letter q of component m, then of component m−1, down to component 1, for each q."""
    words = [w.steps for w in reversed(t.words)]
    return "".join(letter for column in zip(*words) for letter in column)


def shape_of_word(word: str) -> Partition:
    """Rows are the step sequence read from the top, zeros dropped."""
    east = 0
    rows = []
    for letter in word:
        if letter == NORTH:
            rows.append(east)
        else:
            east += 1
    return tuple(x for x in reversed(rows) if x)


def conjugate(shape: Sequence[int]) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > c) for c in range(max(shape)))


def hook_length(shape: Sequence[int], row: int, col: int) -> int:
    """0-based box; hook = 1 + arm + leg."""
    columns = conjugate(shape)
    return shape[row] - col + columns[col] - row - 1


def hook_lengths(shape: Sequence[int]) -> List[List[int]]:
    columns = conjugate(shape)
    return [[length - c + columns[c] - r - 1 for c in range(length)] for r, length in enumerate(shape)]


def interleave_and_circle(t: DyckTuple) -> CircledDiagram:
    """Circles every box whose hook length is divisible by the number of components."""
    b = t.m
    word = interleave(t)
    shape = shape_of_word(word)
    circled = tuple(
        (r, c)
        for r, row in enumerate(hook_lengths(shape))
        for c, hook in enumerate(row)
        if hook % b == 0
    )
    width = shape[0] if shape else 0
    counts = [0] * width
    for _, c in circled:
        counts[c] += 1
    return CircledDiagram(
        word=word,
        shape=shape,
        circled=circled,
        column_counts=tuple(x for x in counts if x),
    )
