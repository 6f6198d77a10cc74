from typing import Dict, List, Tuple

import networkx as nx
from graphviz import Digraph
from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from src.commons.enums.order_enums import OrderKind
from src.commons.exceptions import InvalidObjectError
from src.domain.paths.models import Slope

StepSeq = Tuple[int, ...]


class Poset(BaseModel):
    """
    Cover graph of one order on a family of paths.

    ``covers`` holds index pairs (lower, upper). Order queries walk the
    cover graph on demand.
    """

    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    n: int
    kind: OrderKind
    elements: List[StepSeq]
    covers: List[Tuple[int, int]]

    _graph: nx.DiGraph = PrivateAttr(default=None)
    _index: Dict[StepSeq, int] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def check_covers(self):
        size = len(self.elements)
        for low, high in self.covers:
            if low == high:
                raise InvalidObjectError(f"Reflexive cover at element {low}")
            if not (0 <= low < size and 0 <= high < size):
                raise InvalidObjectError(f"Cover ({low}, {high}) outside 0..{size - 1}")
        return self

    @property
    def slope(self) -> Slope:
        return Slope(self.a, self.b)

    @property
    def graph(self) -> nx.DiGraph:
        if self._graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(range(len(self.elements)))
            graph.add_edges_from(self.covers)
            self._graph = graph
        return self._graph

    def index_of(self, u: StepSeq) -> int:
        if self._index is None:
            self._index = {tuple(e): k for k, e in enumerate(self.elements)}
        try:
            return self._index[tuple(u)]
        except KeyError:
            raise InvalidObjectError(f"{tuple(u)} is not an element of this poset")

    def leq(self, u: StepSeq, v: StepSeq) -> bool:
        return nx.has_path(self.graph, self.index_of(u), self.index_of(v))

    def up_set(self, u: StepSeq) -> List[StepSeq]:
        reach = nx.descendants(self.graph, self.index_of(u))
        return [self.elements[k] for k in sorted(reach)]

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    def minimal_elements(self) -> List[StepSeq]:
        return [self.elements[k] for k in self.graph if self.graph.in_degree(k) == 0]

    def maximal_elements(self) -> List[StepSeq]:
        return [self.elements[k] for k in self.graph if self.graph.out_degree(k) == 0]

    # ==================== EXPORT ====================

    def to_json(self) -> str:
        return self.model_dump_json()

    def to_dot(self) -> str:
        dot = Digraph(
            name=f"{self.kind.value}_{self.a}_{self.b}_{self.n}",
            graph_attr={"rankdir": "BT"},
            node_attr={"shape": "box", "fontname": "monospace"},
        )
        for k, element in enumerate(self.elements):
            dot.node(f"p{k}", label="(" + ",".join(map(str, element)) + ")")
        for low, high in self.covers:
            dot.edge(f"p{low}", f"p{high}")
        return dot.source
