"""Plane trees of classical Dyck words and their natural edge labels."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from graphviz import Digraph

from src.commons.exceptions import InvalidObjectError
from src.domain.paths.models import EAST, NORTH, ONE_ONE, DyckWord


@dataclass(frozen=True)
class PlaneNode:
    """A vertex; the edge above each child is one N…E pair of the word."""

    children: Tuple[PlaneNode, ...] = ()

    @property
    def edge_count(self) -> int:
        return sum(1 + child.edge_count for child in self.children)


def dyck_to_plane_tree(q: DyckWord) -> PlaneNode:
    if q.slope != ONE_ONE:
        raise InvalidObjectError(f"Plane trees need a (1,1) word, got slope {q.slope}")
    stack: List[List[PlaneNode]] = [[]]
    for step in q.steps:
        if step == NORTH:
            stack.append([])
        else:
            children = stack.pop()
            stack[-1].append(PlaneNode(tuple(children)))
    return PlaneNode(tuple(stack[0]))


def plane_tree_to_dyck(root: PlaneNode) -> DyckWord:
    def word(node: PlaneNode) -> str:
        return "".join(NORTH + word(child) + EAST for child in node.children)

    return DyckWord(slope=ONE_ONE, n=root.edge_count, steps=word(root))


def _postorder_of_preorder_labels(root: PlaneNode) -> List[int]:
    """Pre-order labels of the edges, listed in post-order."""
    counter = 0
    post: List[int] = []

    def visit(node: PlaneNode) -> None:
        nonlocal counter
        for child in node.children:
            counter += 1
            label = counter
            visit(child)
            post.append(label)

    visit(root)
    return post


def postorder_word_of_identity_preorder(q: DyckWord) -> Tuple[int, ...]:
    """Etiqueta las aristas en pre-orden (12…n) y lee las etiquetas en post-orden."""
    return tuple(_postorder_of_preorder_labels(dyck_to_plane_tree(q)))


def preorder_word_of_postorder_labels(q: DyckWord) -> Tuple[int, ...]:
    post = _postorder_of_preorder_labels(dyck_to_plane_tree(q))
    word = [0] * len(post)
    for k, label in enumerate(post, start=1):
        word[label - 1] = k
    return tuple(word)


def plane_tree_to_dot(root: PlaneNode, name: str = "plane_tree") -> str:
    """Vertices numbered in pre-order; each edge carries its pre-order label."""
    dot = Digraph(name=name, node_attr={"shape": "point"})
    counter = 0
    dot.node("v0")

    def visit(node: PlaneNode, node_id: str) -> None:
        nonlocal counter
        for child in node.children:
            counter += 1
            child_id = f"v{counter}"
            dot.node(child_id)
            dot.edge(node_id, child_id, label=str(counter))
            visit(child, child_id)

    visit(root, "v0")
    return dot.source
