"""
Walk words of binary trees.

The full walk writes '1' and '!' when going down and up a left edge, '2' and
'@' for a right edge. ω₁ keeps the up letters; ω₂ keeps '!' and the down
letter '2'. In both, left edges read N and right edges read E.
"""
import logging
from typing import Optional

from src.commons.exceptions import InvalidObjectError
from src.domain.bintrees.models import BinNode
from src.domain.paths.models import EAST, NORTH, DyckWord, Slope
from src.domain.paths.sequences import prefix_dominates

logger = logging.getLogger(__name__)

LEFT_DOWN = "1"
LEFT_UP = "!"
RIGHT_DOWN = "2"
RIGHT_UP = "@"


def omega(root: BinNode) -> str:
    parts = []
    if root.left is not None:
        parts.append(LEFT_DOWN + omega(root.left) + LEFT_UP)
    if root.right is not None:
        parts.append(RIGHT_DOWN + omega(root.right) + RIGHT_UP)
    return "".join(parts)


def omega1(root: BinNode) -> str:
    table = {LEFT_UP: NORTH, RIGHT_UP: EAST}
    return "".join(table[x] for x in omega(root) if x in table)


def omega2(root: BinNode) -> str:
    table = {LEFT_UP: NORTH, RIGHT_DOWN: EAST}
    return "".join(table[x] for x in omega(root) if x in table)


def _words(w: DyckWord | str) -> str:
    return w.steps if isinstance(w, DyckWord) else w


def _decode(w1: str, w2: str) -> BinNode:
    m = len(w1)
    if m == 0:
        return BinNode()
    if w1[-1] == NORTH:
        return BinNode(left=_decode(w1[:-1], w2[:-1]))
    split: Optional[int] = None
    for s in range(m):
        if w1[:s].count(NORTH) < w2[:s + 1].count(NORTH):
            split = s
    if split is None:
        return BinNode(right=_decode(w1[:-1], w2[1:]))
    return BinNode(
        left=_decode(w1[:split], w2[:split]),
        right=_decode(w1[split + 1:-1], w2[split + 2:]),
    )


def decode(w1: DyckWord | str, w2: DyckWord | str) -> BinNode:
    """Único árbol binario T con ω₁(T) = w1 y ω₂(T) = w2."""
    w1, w2 = _words(w1), _words(w2)
    if not prefix_dominates(w1, w2):
        raise InvalidObjectError(f"{w1} does not dominate {w2} letter by letter")
    tree = _decode(w1, w2)
    if omega1(tree) != w1 or omega2(tree) != w2:
        raise InvalidObjectError(f"No binary tree has walk words ({w1}, {w2})")
    return tree


def sharp(path: DyckWord) -> DyckWord:
    """Reverse the word and swap N with E; lands in the dual family."""
    swapped = "".join(EAST if x == NORTH else NORTH for x in reversed(path.steps))
    dual: Slope = path.slope.dual
    return DyckWord(slope=dual, n=path.n, steps=swapped)
