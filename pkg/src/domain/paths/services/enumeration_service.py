import logging
from typing import Iterable, Iterator, TypeVar

from src.commons.exceptions import EnumerationBudgetError
from src.domain.paths.models import EAST, NORTH, DyckWord, Slope
from src.domain.paths.sequences import StepSeq, word_to_step_seq

logger = logging.getLogger(__name__)

T = TypeVar("T")


def iter_words(slope: Slope, n: int) -> Iterator[str]:
    """Todas las palabras válidas en orden lexicográfico (E < N)."""
    a, b = slope.a, slope.b
    total_n, total_e = a * n, b * n
    letters: list[str] = []

    def extend(north: int, east: int) -> Iterator[str]:
        if north == total_n and east == total_e:
            yield "".join(letters)
            return
        if east < total_e and b * north >= a * (east + 1):
            letters.append(EAST)
            yield from extend(north, east + 1)
            letters.pop()
        if north < total_n:
            letters.append(NORTH)
            yield from extend(north + 1, east)
            letters.pop()

    yield from extend(0, 0)


class EnumerationService:
    """
    Exhaustive generation with a hard cap on the number of yielded objects.

    Streams are restartable: every call builds a fresh generator.
    """

    def __init__(self, budget: int):
        self.budget = budget

    def bounded(self, items: Iterable[T], what: str = "objects") -> Iterator[T]:
        for count, item in enumerate(items, start=1):
            if count > self.budget:
                logger.warning(f"Budget of {self.budget} {what} exhausted")
                raise EnumerationBudgetError(self.budget, what)
            yield item

    def enumerate_paths(self, slope: Slope, n: int) -> Iterator[DyckWord]:
        logger.debug(f"Enumerating paths of slope {slope}, size {n}")
        words = (DyckWord(slope=slope, n=n, steps=w) for w in iter_words(slope, n))
        return self.bounded(words, what="paths")

    def enumerate_step_seqs(self, slope: Slope, n: int) -> Iterator[StepSeq]:
        return (word_to_step_seq(p) for p in self.enumerate_paths(slope, n))

    def families(self, max_size: int, slopes: Iterable[Slope]) -> Iterator[tuple[Slope, int]]:
        """(slope, n) pairs with 1 ≤ (a+b)·n ≤ max_size."""
        for slope in slopes:
            n = 1
            while (slope.a + slope.b) * n <= max_size:
                yield slope, n
                n += 1
