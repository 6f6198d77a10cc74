import logging
from typing import Callable, List

import networkx as nx

from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.stirling.covers import chi_covers, stirling_rotation_covers
from src.domain.stirling.maps import avoids_312, enumerate_stirling
from src.domain.stirling.models import StirlingPerm

logger = logging.getLogger(__name__)


class StirlingOrderService:
    """Cover graphs of the Young and rotation orders on all b-Stirling permutations."""

    def __init__(self, enumerator: EnumerationService):
        self.enumerator = enumerator

    def _graph(self, n: int, b: int, covers_of: Callable[[StirlingPerm], List[StirlingPerm]]) -> nx.DiGraph:
        graph = nx.DiGraph()
        for perm in enumerate_stirling(n, b, self.enumerator):
            graph.add_node(perm, avoids_312=avoids_312(perm))
            graph.add_edges_from((perm, upper) for upper in covers_of(perm))
        logger.debug(f"Stirling graph n={n}, b={b}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
        return graph

    def rotation_graph(self, n: int, b: int) -> nx.DiGraph:
        return self._graph(n, b, stirling_rotation_covers)

    def young_graph(self, n: int, b: int) -> nx.DiGraph:
        return self._graph(n, b, chi_covers)

    def induced_rotation_order(self, n: int, b: int) -> nx.DiGraph:
        """Strict rotation order restricted to the 312-avoiding permutations."""
        graph = self.rotation_graph(n, b)
        avoiders = [p for p, avoids in graph.nodes(data="avoids_312") if avoids]
        order = nx.DiGraph()
        order.add_nodes_from(avoiders)
        keep = set(avoiders)
        for perm in avoiders:
            order.add_edges_from((perm, q) for q in nx.descendants(graph, perm) if q in keep)
        return order
