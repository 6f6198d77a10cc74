"""
(b+1)-ary trees with labelled internal nodes.

A node labelled i stands for the b regions between its b+1 child edges, all
carrying the label i. ``None`` marks a leaf. Leaves are indexed 0-based from
the left.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from graphviz import Digraph

from src.commons.exceptions import InvalidObjectError
from src.domain.stirling.maps import zeta, zeta_inverse
from src.domain.stirling.models import StirlingPerm

logger = logging.getLogger(__name__)

STAR = "*"
OPEN = "("
CLOSE = ")"


@dataclass(frozen=True)
class AryNode:
    label: int
    children: Tuple[Optional[AryNode], ...]

    @property
    def b(self) -> int:
        return len(self.children) - 1

    def nodes(self) -> Iterator[AryNode]:
        """Pre-order."""
        yield self
        for child in self.children:
            if child is not None:
                yield from child.nodes()

    @property
    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def find(self, label: int) -> AryNode:
        for node in self.nodes():
            if node.label == label:
                return node
        raise InvalidObjectError(f"No node labelled {label}")


def leaf(b: int, label: int) -> AryNode:
    return AryNode(label=label, children=(None,) * (b + 1))


def leaf_owners(root: AryNode) -> List[Tuple[int, int]]:
    """(label of the parent node, child slot) of every leaf, left to right."""
    owners: List[Tuple[int, int]] = []
    _collect_leaves(root, owners)
    return owners


def _collect_leaves(node: AryNode, owners: List[Tuple[int, int]]) -> None:
    for slot, child in enumerate(node.children):
        if child is None:
            owners.append((node.label, slot))
        else:
            _collect_leaves(child, owners)


def ary_tree_leaf_count(root: AryNode) -> int:
    return len(leaf_owners(root))


def _replace(node: AryNode, target: Tuple[int, int], subtree: Optional[AryNode]) -> AryNode:
    label, slot = target
    if node.label == label:
        children = list(node.children)
        children[slot] = subtree
        return AryNode(node.label, tuple(children))
    return AryNode(
        node.label,
        tuple(None if c is None else _replace(c, target, subtree) for c in node.children),
    )


def replace_leaf(root: AryNode, x: int, subtree: Optional[AryNode]) -> AryNode:
    owners = leaf_owners(root)
    if not 0 <= x < len(owners):
        raise InvalidObjectError(f"Leaf {x} outside 0..{len(owners) - 1}")
    return _replace(root, owners[x], subtree)


def _slot_of(root: AryNode, label: int) -> Tuple[int, int]:
    for node in root.nodes():
        for slot, child in enumerate(node.children):
            if child is not None and child.label == label:
                return node.label, slot
    raise InvalidObjectError(f"Node {label} is the root or absent")


def validate(root: AryNode) -> None:
    labels = []
    for node in root.nodes():
        if node.b != root.b:
            raise InvalidObjectError(f"Node {node.label} has {len(node.children)} children, expected {root.b + 1}")
        for child in node.children:
            if child is not None and child.label <= node.label:
                raise InvalidObjectError(f"Label {child.label} sits below the smaller label {node.label}")
        labels.append(node.label)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise InvalidObjectError(f"Labels {sorted(labels)} are not 1..{len(labels)}")


# ==================== BIJECTION ξ ====================


def tree_from_insertions(u: Sequence[int], b: int) -> AryNode:
    """Node i hangs from leaf u_i of the tree built from nodes 1..i−1."""
    if not u or u[0] != 0:
        raise InvalidObjectError(f"Insertion sequence {tuple(u)} must start with 0")
    root = leaf(b, 1)
    for i, x in enumerate(u[1:], start=2):
        root = replace_leaf(root, x, leaf(b, i))
    return root


def insertions_of_tree(root: AryNode) -> Tuple[int, ...]:
    validate(root)
    u = []
    tree = root
    for label in range(root.size, 1, -1):
        parent = _slot_of(tree, label)
        if any(c is not None for c in tree.find(label).children):
            raise InvalidObjectError(f"Node {label} is not a leaf-only node")
        tree = _replace(tree, parent, None)
        u.append(leaf_owners(tree).index(parent))
    u.append(0)
    return tuple(reversed(u))


def xi(perm: StirlingPerm) -> AryNode:
    return tree_from_insertions(zeta_inverse(perm), perm.b)


def xi_inverse(root: AryNode) -> StirlingPerm:
    return zeta(insertions_of_tree(root), root.b)


# ==================== ROTACIÓN ====================


def tree_rotation(root: AryNode, i: int) -> AryNode:
    """
    Desplaza T_i sin su último hijo T_j una hoja a la izquierda y cuelga T_j
    de la hoja que ocupaba T_i. Identidad si no hay hoja a la izquierda o si
    esa hoja pertenece a un nodo con etiqueta mayor que i.
    """
    if not 2 <= i <= root.size:
        raise InvalidObjectError(f"Rotation index {i} outside 2..{root.size}")
    subtree = root.find(i)
    slot = _slot_of(root, i)
    rest = _replace(root, slot, None)
    owners = leaf_owners(rest)
    x = owners.index(slot)
    if x == 0 or owners[x - 1][0] > i:
        logger.debug(f"Rotation r_{i} acts as the identity")
        return root
    last = subtree.children[-1]
    trimmed = AryNode(i, subtree.children[:-1] + (None,))
    rotated = _replace(rest, slot, last)
    return _replace(rotated, owners[x - 1], trimmed)


# ==================== PALABRAS Y EXPORTACIÓN ====================


def walk_word(root: AryNode) -> str:
    """Contour word: '(' on the leftmost edge, '*' per region, ')' on the rightmost edge."""
    parts = [OPEN]
    for k, child in enumerate(root.children):
        if k:
            parts.append(STAR)
        if child is not None:
            parts.append(walk_word(child))
    parts.append(CLOSE)
    return "".join(parts)


def tree_from_walk_word(text: str) -> AryNode:
    """Inverse of walk_word; nodes are labelled in pre-order."""
    counter = 0
    pos = 0

    def node() -> AryNode:
        nonlocal counter, pos
        if pos >= len(text) or text[pos] != OPEN:
            raise InvalidObjectError(f"Expected '(' at position {pos + 1} of {text!r}")
        pos += 1
        counter += 1
        label = counter
        children: List[Optional[AryNode]] = [None]
        while pos < len(text) and text[pos] != CLOSE:
            if text[pos] == STAR:
                children.append(None)
                pos += 1
            elif text[pos] == OPEN:
                if children[-1] is not None:
                    raise InvalidObjectError(f"Two subtrees share a slot at position {pos + 1}")
                children[-1] = node()
            else:
                raise InvalidObjectError(f"Unexpected symbol {text[pos]!r} at position {pos + 1}")
        if pos >= len(text):
            raise InvalidObjectError(f"Unbalanced presentation {text!r}")
        pos += 1
        return AryNode(label, tuple(children))

    root = node()
    if pos != len(text):
        raise InvalidObjectError(f"Trailing symbols after position {pos} of {text!r}")
    validate(root)
    return root


def to_nested(root: Optional[AryNode]) -> Any:
    if root is None:
        return None
    return [root.label, *(to_nested(c) for c in root.children)]


def ary_tree_to_dot(root: AryNode, name: str = "ary_tree") -> str:
    dot = Digraph(name=name, node_attr={"shape": "circle"})
    leaves = 0
    for node in root.nodes():
        dot.node(f"n{node.label}", label=str(node.label))
    for node in root.nodes():
        for slot, child in enumerate(node.children):
            if child is None:
                leaf_id = f"leaf{leaves}"
                leaves += 1
                dot.node(leaf_id, label="", shape="point")
                dot.edge(f"n{node.label}", leaf_id, taillabel=str(slot))
            else:
                dot.edge(f"n{node.label}", f"n{child.label}", taillabel=str(slot))
    return dot.source
