"""Building B(Q,P) by rotations, subdividing its edges and splitting it into component trees."""
import logging
from dataclasses import dataclass
from itertools import groupby
from typing import Optional, Tuple

from src.commons.exceptions import IncomparablePathsError, InvalidObjectError
from src.domain.bintrees.models import BinNode
from src.domain.bintrees.words import decode, omega1, omega2, sharp
from src.domain.paren.models import DyckTuple
from src.domain.paths.models import NORTH, DyckWord
from src.domain.paths.sequences import lowest_path, prefix_dominates

logger = logging.getLogger(__name__)


def _left_chain(length: int, bottom: BinNode) -> BinNode:
    for _ in range(length - 1):
        bottom = BinNode(left=bottom)
    return bottom


def _right_chain(length: int, bottom: BinNode) -> BinNode:
    for _ in range(length - 1):
        bottom = BinNode(right=bottom)
    return bottom


# ==================== Tr(P) ====================


def tr(path: DyckWord) -> BinNode:
    """Un bloque por tramo N^iE^j; cada bloque anterior cuelga del extremo de la cadena izquierda del siguiente."""
    tree = BinNode()
    runs = [len(list(g)) for _, g in groupby(path.steps)]
    for i, j in zip(runs[::2], runs[1::2]):
        tree = BinNode(left=_left_chain(i, tree), right=_right_chain(j, BinNode()))
    return tree


# ==================== ROTACIÓN Y B(Q,P) ====================


def _hang_right_leaf(node: BinNode) -> BinNode:
    """Hangs a right leaf at the end of the leftmost descent of ``node``."""
    if node.left is not None:
        return BinNode(left=_hang_right_leaf(node.left), right=node.right)
    if node.right is not None:
        return BinNode(right=_hang_right_leaf(node.right))
    return BinNode(right=BinNode())


def _regrow(moved: BinNode, rest: Optional[BinNode]) -> BinNode:
    """Reglues ``moved`` at the bottom of the left spine of ``rest``."""
    if rest is None:
        return BinNode(left=moved)
    if rest.left is not None:
        return BinNode(left=_regrow(moved, rest.left), right=rest.right)
    if rest.right is not None:
        return BinNode(left=moved, right=_hang_right_leaf(rest.right))
    return BinNode(left=moved, right=BinNode())


def _swap_at(node: BinNode, k: int) -> BinNode:
    """
    Corta el subárbol derecho del hijo izquierdo cuyo N ocupa la posición k
    de ω₁(node) y lo vuelve a pegar bajo el lado derecho.
    """
    left_size = node.left.edge_count + 1 if node.left is not None else 0
    if k < left_size - 1:
        return BinNode(left=_swap_at(node.left, k), right=node.right)
    if k == left_size - 1:
        child = node.left
        if child.right is None:
            raise InvalidObjectError(f"Letter {k} of ω₁ is not preceded by E")
        return BinNode(left=child.left, right=_regrow(child.right, node.right))
    if node.right is None or k - left_size >= node.right.edge_count:
        raise InvalidObjectError(f"Letter {k} of ω₁ is not an N")
    return BinNode(left=node.left, right=_swap_at(node.right, k - left_size))


def binary_rotation(tree: BinNode, target: DyckWord | str) -> BinNode:
    """
    Advances ω₁ one Young cover towards ``target`` keeping ω₂: the first N at
    or after the first difference moves one step to the left.
    """
    goal = target.steps if isinstance(target, DyckWord) else target
    w1 = omega1(tree)
    if w1 == goal:
        return tree
    if not prefix_dominates(goal, w1):
        raise IncomparablePathsError(f"{goal} is not above {w1} in the Young order")
    k0 = next(k for k, (x, y) in enumerate(zip(w1, goal)) if x != y)
    k1 = w1.index(NORTH, k0)
    rotated = _swap_at(tree, k1)
    logger.debug(f"Rotation {w1} -> {omega1(rotated)} towards {goal}")
    return rotated


def build_bqp(q: DyckWord, p: DyckWord) -> BinNode:
    """B(Q,P): starts at Tr(P) and rotates until ω₁ reaches Q."""
    if q.slope != p.slope or q.n != p.n or not prefix_dominates(q.steps, p.steps):
        raise IncomparablePathsError(f"{p} ≤_Y {q} does not hold")
    tree = tr(p)
    steps = 0
    while omega1(tree) != q.steps:
        tree = binary_rotation(tree, q)
        steps += 1
    logger.debug(f"B({q},{p}) reached after {steps} rotations")
    return tree


# ==================== SUBDIVISIÓN ====================


def _subdivided(node: BinNode, left_parts: int, right_parts: int) -> BinNode:
    left = right = None
    if node.left is not None:
        left = _left_chain(left_parts, _subdivided(node.left, left_parts, right_parts))
    if node.right is not None:
        right = _right_chain(right_parts, _subdivided(node.right, left_parts, right_parts))
    return BinNode(left=left, right=right)


def _with_tail(node: BinNode, extra: int) -> BinNode:
    if node.right is not None:
        return BinNode(left=node.left, right=_with_tail(node.right, extra))
    return BinNode(left=node.left, right=_right_chain(extra, BinNode()))


def subdivide(tree: BinNode, left_parts: int, right_parts: int, extra_right: int = 0) -> BinNode:
    """
    Splits every left edge into ``left_parts`` edges and every right edge into
    ``right_parts``, then hangs ``extra_right`` right edges below the rightmost
    node.
    """
    if left_parts < 1 or right_parts < 1 or extra_right < 0:
        raise InvalidObjectError(f"Invalid subdivision ({left_parts},{right_parts},{extra_right})")
    result = _subdivided(tree, left_parts, right_parts)
    if extra_right:
        result = _with_tail(result, extra_right)
    return result


def subdivide_left_with_tail(tree: BinNode, b: int, extra_right: int) -> BinNode:
    return subdivide(tree, b, 1, extra_right)


# ==================== EXTRACCIÓN ====================


def extract_subtrees(tree: BinNode, r: int) -> Tuple[BinNode, ...]:
    """Tree i keeps the edges at positions i, r+i, 2r+i, … of both walk words."""
    w1, w2 = omega1(tree), omega2(tree)
    if r < 1 or len(w1) % r:
        raise InvalidObjectError(f"A tree with {len(w1)} edges cannot be split into {r} trees")
    return tuple(decode(w1[i::r], w2[i::r]) for i in range(r))


def d_words(tree: BinNode, b: int) -> Tuple[DyckTuple, DyckTuple]:
    """Component j reads the letters b+1−j, 2b+1−j, … of ω₁ and of ω₂."""
    w1, w2 = omega1(tree), omega2(tree)
    if b < 1 or len(w1) % (2 * b):
        raise InvalidObjectError(f"Walk words of length {len(w1)} do not split into {b} paths")
    first = DyckTuple.from_texts([w1[b - j::b] for j in range(1, b + 1)])
    second = DyckTuple.from_texts([w2[b - j::b] for j in range(1, b + 1)])
    return first, second


def tail_length(path: DyckWord) -> int:
    a, b = path.slope.a, path.slope.b
    return (a - 1) * b * path.n


def d_words_of_path(path: DyckWord) -> Tuple[DyckTuple, DyckTuple]:
    b = path.slope.b
    base = build_bqp(path, lowest_path(path.slope, path.n))
    return d_words(subdivide_left_with_tail(base, b, tail_length(path)), b)


@dataclass(frozen=True)
class DualTrees:
    b_trees: Tuple[BinNode, ...]
    c_trees: Tuple[BinNode, ...]


def dual_trees(path: DyckWord) -> DualTrees:
    """
    𝔟ᵢ come from B(P, P₀) with left edges in b pieces and right edges in a
    pieces; 𝔠ᵢ come from B(P♯, P₀♯) at the dual slope with the roles swapped.
    Both families are split into a trees.
    """
    a, b, n = path.slope.a, path.slope.b, path.n
    lowest = lowest_path(path.slope, n)
    big = subdivide(build_bqp(path, lowest), b, a)
    dual_big = subdivide(build_bqp(sharp(path), sharp(lowest)), a, b)
    return DualTrees(b_trees=extract_subtrees(big, a), c_trees=extract_subtrees(dual_big, a))
