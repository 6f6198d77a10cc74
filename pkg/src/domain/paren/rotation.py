"""Rotations on classical Dyck words, parenthesis presentations and tuples."""
import logging
from typing import Dict

from src.commons.exceptions import InvalidObjectError
from src.domain.paren.models import DyckTuple, ParenPres
from src.domain.paren.presentation import star_labels_type_I
from src.domain.paths.models import EAST, NORTH, DyckWord
from src.domain.trees.ary_tree import CLOSE, OPEN, STAR

logger = logging.getLogger(__name__)


def _is_dyck_block(block: str) -> bool:
    height = 0
    for letter in block:
        height += 1 if letter == NORTH else -1
        if height < 0:
            return False
    return height == 0


def _block(q: DyckWord, i: int, m: int) -> str:
    s = q.steps
    if not 1 <= i < len(s) or i + 2 * m > len(s):
        raise InvalidObjectError(f"Rotation ({i},{m}) does not fit in {s}")
    if s[i - 1] != EAST or s[i] != NORTH:
        raise InvalidObjectError(f"Position {i} of {s} is not an EN valley")
    return s[i:i + 2 * m]


def rotate_dyck(q: DyckWord, i: int, m: int) -> DyckWord:
    """Moves the E at position i (1-based) past the next 2m letters."""
    s = q.steps
    block = _block(q, i, m)
    return DyckWord(slope=q.slope, n=q.n, steps=s[:i - 1] + block + EAST + s[i + 2 * m:])


def is_admissible_rotation(q: DyckWord, i: int, m: int) -> bool:
    return _is_dyck_block(_block(q, i, m))


def is_irreducible_rotation(q: DyckWord, i: int, m: int) -> bool:
    block = _block(q, i, m)
    if not _is_dyck_block(block) or not block:
        return False
    height = 0
    for letter in block[:-1]:
        height += 1 if letter == NORTH else -1
        if height == 0:
            return False
    return True


def _matching_close(text: str, pos: int) -> int:
    depth = 0
    for k in range(pos, len(text)):
        if text[k] == OPEN:
            depth += 1
        elif text[k] == CLOSE:
            depth -= 1
            if depth == 0:
                return k
    raise InvalidObjectError(f"Unbalanced parenthesis at {pos} of {text}")


def rotate_paren(pp: ParenPres | str, i: int) -> ParenPres:
    """
    Rotación r_i sobre el texto. Los n′ "(" que van de ε(i) a la última
    estrella del nodo i, junto con sus ")", se corren una estrella a la
    izquierda; el último hijo del nodo i se queda en su sitio.

    ``*(A*W)`` pasa a ``(A*)*W``, con A el tramo hasta la última estrella.
    """
    if isinstance(pp, str):
        pp = ParenPres(pp)
    text = pp.text
    pos = pp.epsilon(i)
    if pos == 0 or text[pos - 1] != STAR:
        raise InvalidObjectError(f"No star immediately left of node {i} in {pp}")
    last_star = pp.stars_of(i)[-1]
    end = _matching_close(text, pos)
    rotated = text[:pos - 1] + text[pos:last_star + 1] + CLOSE + STAR + text[last_star + 1:end] + text[end + 1:]
    logger.debug(f"Paren rotation at {i}: {text} -> {rotated}")
    return ParenPres(rotated)


def rotate_tuple(t: DyckTuple, pp: ParenPres | str, i: int, a: int) -> DyckTuple:
    """
    Rotates, for each of the a stars nearest to the left of node i, the
    component named by its type I label. The rotation size is the number of
    nodes between node i and its last star.
    """
    if isinstance(pp, str):
        pp = ParenPres(pp)
    if t.m != pp.b or t.n != pp.n:
        raise InvalidObjectError(f"Tuple {t} does not match presentation {pp}")
    pos = pp.epsilon(i)
    left = [p for p in pp.star_positions if p < pos]
    if len(left) < a:
        raise InvalidObjectError(f"Node {i} of {pp} has fewer than {a} stars to its left")
    labels = star_labels_type_I(pp)
    last_star = pp.stars_of(i)[-1]
    size = pp.text[pos:last_star + 1].count(OPEN)

    targets: Dict[int, int] = {}
    for p in left[-a:]:
        label = labels[p]
        if label in targets:
            raise InvalidObjectError(f"Label {label} repeats among the stars left of node {i}")
        targets[label] = sum(1 for x in left if labels[x] == label)

    words = list(t.words)
    for label, rank in targets.items():
        word = words[label - 1]
        east_positions = [k for k, letter in enumerate(word.steps, start=1) if letter == EAST]
        words[label - 1] = rotate_dyck(word, east_positions[rank - 1], size)
    logger.debug(f"Tuple rotation at node {i}: components {sorted(targets)} by {size}")
    return DyckTuple(tuple(words))
