"""
Binary trees with left and right edges.

A node is a ``BinNode``; a missing child is ``None``. The empty tree is a
single node with no children.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from graphviz import Digraph

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class BinNode:
    left: Optional[BinNode] = None
    right: Optional[BinNode] = None

    @property
    def edge_count(self) -> int:
        return sum(1 + child.edge_count for child in (self.left, self.right) if child is not None)

    @property
    def left_edge_count(self) -> int:
        own = 1 if self.left is not None else 0
        return own + sum(c.left_edge_count for c in (self.left, self.right) if c is not None)

    def edges(self) -> Iterator[Tuple[str, BinNode]]:
        """(side, child) pairs in walk order."""
        if self.left is not None:
            yield LEFT, self.left
        if self.right is not None:
            yield RIGHT, self.right


def post_order_edge_labels(root: BinNode) -> List[Tuple[str, int]]:
    """
    Lista (lado, etiqueta) de cada arista en el orden del recorrido: la
    etiqueta numera desde 1 visitando subárbol izquierdo, derecho y luego la
    arista hacia el padre.
    """
    labels: List[Tuple[str, int]] = []
    counter = 0

    def visit(node: BinNode) -> None:
        nonlocal counter
        for side, child in node.edges():
            slot = len(labels)
            labels.append((side, 0))
            visit(child)
            counter += 1
            labels[slot] = (side, counter)

    visit(root)
    return labels


def bintree_to_dot(root: BinNode, name: str = "bintree", modulus: Optional[int] = None) -> str:
    """Left edges leave to the south-west, right edges to the south-east.

    With ``modulus`` every edge shows its post-order label reduced modulo it.
    """
    dot = Digraph(name=name, node_attr={"shape": "point"})
    labels = iter(post_order_edge_labels(root))
    counter = 0
    dot.node("b0")

    def visit(node: BinNode, node_id: str) -> None:
        nonlocal counter
        for side, child in node.edges():
            counter += 1
            child_id = f"b{counter}"
            dot.node(child_id)
            _, label = next(labels)
            shown = None if modulus is None else str(label % modulus)
            dot.edge(node_id, child_id, label=shown, tailport="sw" if side == LEFT else "se")
            visit(child, child_id)

    visit(root, "b0")
    return dot.source
