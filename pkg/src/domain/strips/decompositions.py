"""
Horizontal and vertical strip decompositions of an (a,b)-Dyck path, and the
enlarged (1,1) path they can both be read from.
"""
from typing import List, Sequence

from src.commons.exceptions import InvalidObjectError
from src.domain.paren.models import DyckTuple
from src.domain.paths.models import EAST, NORTH, ONE_ONE, DyckWord
from src.domain.paths.sequences import height_seq_to_word, word_to_height_seq, word_to_step_seq


def _deal(items: Sequence[int], hands: int) -> List[tuple]:
    return [tuple(items[i::hands]) for i in range(hands)]


def delta(path: DyckWord) -> DyckTuple:
    """Cada altura se repite a veces y se reparte en b sucesiones de alturas."""
    a, b = path.slope.a, path.slope.b
    repeated = [h for h in word_to_height_seq(path) for _ in range(a)]
    return DyckTuple(tuple(height_seq_to_word(h, ONE_ONE) for h in _deal(repeated, b)))


def theta(path: DyckWord) -> DyckTuple:
    """Cada paso se repite b veces y se reparte en a sucesiones de pasos."""
    a, b = path.slope.a, path.slope.b
    repeated = [x for x in word_to_step_seq(path) for _ in range(b)]
    return DyckTuple.from_step_seqs(_deal(repeated, a))


def enlarge(path: DyckWord) -> DyckWord:
    """N → N^b, E → E^a."""
    a, b = path.slope.a, path.slope.b
    steps = "".join(NORTH * b if step == NORTH else EAST * a for step in path.steps)
    return DyckWord(slope=ONE_ONE, n=a * b * path.n, steps=steps)


def enlarged_path_bar(path: DyckWord) -> DyckWord:
    """
    P̄: each run N^i becomes N^{b·i}, runs of E stay, and E^{b·an − bn} closes
    the word into a classical Dyck path of semilength abn.
    """
    b = path.slope.b
    steps = "".join(NORTH * b if step == NORTH else EAST for step in path.steps)
    steps += EAST * (steps.count(NORTH) - steps.count(EAST))
    return DyckWord(slope=ONE_ONE, n=len(steps) // 2, steps=steps)


def bar_components(path: DyckWord) -> DyckTuple:
    """Componente i lee las letras b+1−i, 2b+1−i, … de P̄."""
    b = path.slope.b
    steps = enlarged_path_bar(path).steps
    return DyckTuple.from_texts([steps[b - i::b] for i in range(1, b + 1)])


def interleave_extract(enlarged: DyckWord, r: int) -> DyckTuple:
    """Component i reads the letters i, r+i, 2r+i, … of the enlarged path."""
    if r < 1 or len(enlarged.steps) % (2 * r):
        raise InvalidObjectError(f"Cannot split {enlarged} into {r} words of equal size")
    return DyckTuple.from_texts(["".join(part) for part in _deal(enlarged.steps, r)])
