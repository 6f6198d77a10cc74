import logging
from typing import Any, ClassVar, Iterable, Iterator, Optional, Tuple

from src.domain.paths.models import Slope
from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.verification.dtos.config_dto import CheckConfigDTO, CheckGridDTO

logger = logging.getLogger(__name__)


class PropositionCheck:
    """
    Una afirmación verificable por enumeración exhaustiva.

    Subclasses set CONFIG and implement `verify`; `cases` defaults to every
    path of the family.
    """

    CONFIG: ClassVar[CheckConfigDTO]

    def __init__(self, enumerator: EnumerationService):
        self.enumerator = enumerator

    @classmethod
    def get_config(cls) -> CheckConfigDTO:
        return cls.CONFIG

    @classmethod
    def applies(cls, slope: Slope) -> bool:
        kind = cls.CONFIG.applies_to
        if kind == "unit_a":
            return slope.a == 1
        if kind == "classical":
            return slope.a == slope.b == 1
        if kind == "a_below_b":
            return slope.a < slope.b
        return True

    def families(self, grid: CheckGridDTO) -> Iterator[Tuple[Slope, int]]:
        slopes = []
        for a, b in grid.slopes:
            slope = Slope(a, b)
            if self.applies(slope):
                slopes.append(slope)
            else:
                logger.info(f"{self.CONFIG.name} does not apply to slope {slope}, skipped")
        if grid.n is not None:
            for slope in slopes:
                yield slope, grid.n
        else:
            yield from self.enumerator.families(grid.max_size, slopes)

    def cases(self, slope: Slope, n: int) -> Iterable[Any]:
        return self.enumerator.enumerate_paths(slope, n)

    def describe(self, case: Any) -> str:
        return str(case)

    def verify(self, case: Any, slope: Slope, n: int) -> Optional[str]:
        """None when the instance satisfies the claim, otherwise what went wrong."""
        raise NotImplementedError


def format_seq(u: Iterable[int]) -> str:
    return ",".join(str(x) for x in u)
