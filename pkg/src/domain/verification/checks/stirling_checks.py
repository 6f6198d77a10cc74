from typing import Iterable, Iterator, Optional, Tuple

import networkx as nx

from src.commons.enums.order_enums import OrderKind
from src.domain.orders.covers import young_cover_seqs
from src.domain.orders.dtos.poset import Poset
from src.domain.orders.services.poset_service import PosetService
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import StepSeq, fuss_catalan, is_step_seq, word_to_step_seq
from src.domain.stirling.covers import chi_covers
from src.domain.stirling.maps import avoids_312, enumerate_stirling, zeta, zeta_inverse
from src.domain.stirling.services.stirling_order_service import StirlingOrderService
from src.domain.verification.checks.base import PropositionCheck, format_seq
from src.domain.verification.dtos.config_dto import CheckConfigDTO

UNIT_SLOPES = [(1, 1), (1, 2), (1, 3)]


class ZetaBijectionCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="zeta-bijection",
        claim="ζ sends (1,b)-paths to 312-avoiding b-Stirling permutations and ζ⁻¹ undoes it",
        reference="insertion map on step sequences",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        perm = zeta(u, slope.b)
        if not avoids_312(perm):
            return f"{perm} contains 312"
        if zeta_inverse(perm) != u:
            return f"ζ⁻¹({perm}) = {zeta_inverse(perm)}"
        return None


class StirlingAvoidersCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="stirling-avoiders",
        claim="312-avoiding b-Stirling permutations are counted by the Fuss-Catalan numbers",
        reference="pattern avoidance count",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def cases(self, slope: Slope, n: int) -> Iterable[int]:
        return [n]

    def describe(self, case: int) -> str:
        return f"size {case}"

    def verify(self, case: int, slope: Slope, n: int) -> Optional[str]:
        count = sum(1 for perm in enumerate_stirling(n, slope.b, self.enumerator) if avoids_312(perm))
        expected = fuss_catalan(slope.b, n)
        if count != expected:
            return f"{count} avoiders, expected {expected}"
        return None


class ChiYoungCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="chi-young",
        claim="χ moves on ζ(u) that stay among paths are exactly the Young covers of u",
        reference="Young order on Stirling permutations",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        images = {zeta_inverse(p) for p in chi_covers(zeta(u, slope.b))}
        images = {v for v in images if is_step_seq(v, slope)}
        expected = set(young_cover_seqs(u))
        if images != expected:
            return f"χ gives {sorted(images)}, Young covers are {sorted(expected)}"
        return None


class StirlingRotationCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="stirling-rotation",
        claim="Rotation of Stirling permutations restricted to 312-avoiders is the rotation order on paths",
        reference="rotation order on Stirling permutations",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def cases(self, slope: Slope, n: int) -> Iterator[Tuple[StepSeq, nx.DiGraph, Poset]]:
        induced = StirlingOrderService(self.enumerator).induced_rotation_order(n, slope.b)
        poset = PosetService(self.enumerator).build_poset(slope, n, OrderKind.ROTATION)
        for u in poset.elements:
            yield u, induced, poset

    def describe(self, case) -> str:
        return format_seq(case[0])

    def verify(self, case, slope: Slope, n: int) -> Optional[str]:
        u, induced, poset = case
        expected = {zeta(v, slope.b) for v in poset.up_set(u)}
        found = set(induced.successors(zeta(u, slope.b)))
        if found != expected:
            return f"{len(found)} permutations above, {len(expected)} paths above"
        return None
