import logging
from typing import Dict, List, Tuple

from src.commons.enums.order_enums import OrderKind
from src.domain.orders.covers import get_cover_function
from src.domain.orders.dtos.poset import Poset
from src.domain.paths.models import Slope
from src.domain.paths.sequences import StepSeq, word_to_step_seq
from src.domain.paths.services.enumeration_service import EnumerationService

logger = logging.getLogger(__name__)


class PosetService:
    def __init__(self, enumerator: EnumerationService):
        self.enumerator = enumerator

    def build_poset(self, slope: Slope, n: int, kind: OrderKind | str) -> Poset:
        kind = OrderKind(kind)
        covers_of = get_cover_function(kind)
        paths = sorted(self.enumerator.enumerate_paths(slope, n), key=word_to_step_seq)
        elements = [word_to_step_seq(p) for p in paths]
        index = {u: k for k, u in enumerate(elements)}

        covers: List[Tuple[int, int]] = []
        for low, path in enumerate(paths):
            for upper in covers_of(path):
                covers.append((low, index[word_to_step_seq(upper)]))

        logger.info(
            f"Built {kind.value} poset for slope {slope}, n={n}: "
            f"{len(elements)} elements, {len(covers)} covers"
        )
        return Poset(a=slope.a, b=slope.b, n=n, kind=kind, elements=elements, covers=covers)

    def cover_differences(self, slope: Slope, n: int) -> Dict[StepSeq, Tuple[List[StepSeq], List[StepSeq]]]:
        """
        Paths whose rotation covers differ between the primitive-subsequence and
        the horizontal-distance definitions, mapped to (only_rotation, only_hor).
        """
        rotation = get_cover_function(OrderKind.ROTATION)
        hor = get_cover_function(OrderKind.ROTATION_HOR)
        differences = {}
        for path in self.enumerator.enumerate_paths(slope, n):
            by_rotation = {word_to_step_seq(p) for p in rotation(path)}
            by_hor = {word_to_step_seq(p) for p in hor(path)}
            if by_rotation != by_hor:
                differences[word_to_step_seq(path)] = (
                    sorted(by_rotation - by_hor),
                    sorted(by_hor - by_rotation),
                )
        if differences:
            logger.debug(f"Rotation variants differ on {len(differences)} paths at slope {slope}, n={n}")
        return differences

    def rotation_refines_young(self, slope: Slope, n: int) -> bool:
        """Cada cobertura de rotación es una cadena de coberturas de Young."""
        young = self.build_poset(slope, n, OrderKind.YOUNG)
        rotation = self.build_poset(slope, n, OrderKind.ROTATION)
        for low, high in rotation.covers:
            if not young.leq(rotation.elements[low], rotation.elements[high]):
                logger.warning(
                    f"Rotation cover {rotation.elements[low]} -> {rotation.elements[high]} "
                    f"is not a Young chain"
                )
                return False
        return True

    def is_graded_by_area(self, poset: Poset) -> bool:
        """Every cover lowers one contiguous block of u by exactly one."""
        for low, high in poset.covers:
            diffs = [x - y for x, y in zip(poset.elements[low], poset.elements[high])]
            changed = [k for k, d in enumerate(diffs) if d]
            if not changed or any(d not in (0, 1) for d in diffs):
                return False
            if changed != list(range(changed[0], changed[-1] + 1)):
                return False
            if poset.kind == OrderKind.YOUNG and len(changed) != 1:
                return False
        return True
