"""Cover relations of the Young order and of the two rotation orders.

Every cover function maps a path to the list of paths covering it, sorted
lexicographically by step sequence. Positions are 1-based, as in the
step-sequence notation u = (u_1, ..., u_an).
"""
from typing import Callable, Dict, List, Optional, Sequence

from src.commons.enums.order_enums import OrderKind
from src.commons.exceptions import InvalidObjectError
from src.domain.paths.models import EAST, NORTH, DyckWord, Slope
from src.domain.paths.sequences import (
    StepSeq,
    horizontal_distance,
    lowest_path,
    step_seq_to_word,
    word_to_step_seq,
)

CoverFunction = Callable[[DyckWord], List[DyckWord]]


def primitive_subsequence(u: Sequence[int], i: int, slope: Slope) -> int:
    """
    Last position k ≥ i such that a·(u_j − u_i) < b·(j − i) for every j in (i, k].
    """
    if not 1 <= i <= len(u):
        raise InvalidObjectError(f"Position {i} outside 1..{len(u)}")
    return _primitive_end(u, i - 1, slope) + 1


def _primitive_end(u: Sequence[int], i: int, slope: Slope) -> int:
    a, b = slope.a, slope.b
    k = i
    while k + 1 < len(u) and a * (u[k + 1] - u[i]) < b * (k + 1 - i):
        k += 1
    return k


def _sorted_words(seqs, slope: Slope) -> List[DyckWord]:
    return [step_seq_to_word(s, slope) for s in sorted(set(seqs))]


def rotation_cover_seqs(u: StepSeq, slope: Slope) -> List[StepSeq]:
    covers = []
    for i in range(1, len(u)):
        if u[i - 1] < u[i]:
            k = _primitive_end(u, i, slope)
            covers.append(u[:i] + tuple(x - 1 for x in u[i:k + 1]) + u[k + 1:])
    return sorted(covers)


def young_cover_seqs(u: StepSeq) -> List[StepSeq]:
    return sorted(
        u[:i] + (u[i] - 1,) + u[i + 1:]
        for i in range(1, len(u))
        if u[i - 1] < u[i]
    )


def rotation_covers(path: DyckWord) -> List[DyckWord]:
    return _sorted_words(rotation_cover_seqs(word_to_step_seq(path), path.slope), path.slope)


def young_covers(path: DyckWord) -> List[DyckWord]:
    return _sorted_words(young_cover_seqs(word_to_step_seq(path)), path.slope)


def rotation_covers_hor(path: DyckWord, lowest: Optional[DyckWord] = None) -> List[DyckWord]:
    """
    Para cada punto p precedido por E y seguido por N, mueve ese E justo
    después del primer punto posterior p' con la misma distancia horizontal.
    """
    lowest = lowest or lowest_path(path.slope, path.n)
    if lowest.slope != path.slope or lowest.n != path.n:
        raise InvalidObjectError(f"Reference path {lowest} is not in the family of {path}")
    steps = path.steps
    points = path.points()
    hor = [horizontal_distance(lowest, p) for p in points]
    covers = []
    for t in range(1, len(steps)):
        if steps[t - 1] != EAST or steps[t] != NORTH:
            continue
        t2 = next((s for s in range(t + 1, len(points)) if hor[s] == hor[t]), None)
        if t2 is None:
            continue
        moved = steps[:t - 1] + steps[t:t2] + EAST + steps[t2:]
        covers.append(DyckWord(slope=path.slope, n=path.n, steps=moved))
    return sorted(set(covers), key=word_to_step_seq)


COVER_FUNCTIONS: Dict[OrderKind, CoverFunction] = {
    OrderKind.YOUNG: young_covers,
    OrderKind.ROTATION: rotation_covers,
    OrderKind.ROTATION_HOR: rotation_covers_hor,
}


def get_cover_function(kind: OrderKind | str) -> CoverFunction:
    try:
        return COVER_FUNCTIONS[OrderKind(kind)]
    except ValueError:
        raise KeyError(f"Order '{kind}' no encontrado en COVER_FUNCTIONS")
