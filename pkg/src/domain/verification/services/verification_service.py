import logging
import time
from typing import List, Optional, Sequence, Tuple

from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.verification.dtos.config_dto import CheckConfigDTO, CheckGridDTO
from src.domain.verification.dtos.verification_report import FailureDTO, VerificationReport
from src.domain.verification.services.registry import get_check_class, list_check_names

logger = logging.getLogger(__name__)


class VerificationService:
    """
    Corre los checks registrados sobre una grilla de familias (pendiente, n).

    Checks run one after the other; `run_all` returns the reports ordered by
    check name.
    """

    def __init__(self, enumerator: EnumerationService, max_size: int = 12):
        self.enumerator = enumerator
        self.max_size = max_size

    def list_checks(self) -> List[CheckConfigDTO]:
        return [get_check_class(name).get_config() for name in list_check_names()]

    def grid_for(
        self,
        name: str,
        slopes: Optional[Sequence[Tuple[int, int]]] = None,
        n: Optional[int] = None,
        max_size: Optional[int] = None,
    ) -> CheckGridDTO:
        grid = get_check_class(name).get_config().default_grid(max_size or self.max_size)
        if slopes:
            grid.slopes = [tuple(s) for s in slopes]
        grid.n = n
        return grid

    def run(self, name: str, grid: Optional[CheckGridDTO] = None) -> VerificationReport:
        check_cls = get_check_class(name)
        grid = grid or self.grid_for(name)
        check = check_cls(self.enumerator)
        report = VerificationReport(check=name, grid=grid)

        start = time.perf_counter()
        for slope, n in check.families(grid):
            logger.debug(f"{name}: slope {slope}, n={n}")
            for case in check.cases(slope, n):
                report.instances += 1
                detail = check.verify(case, slope, n)
                if detail is not None:
                    report.failures.append(
                        FailureDTO(a=slope.a, b=slope.b, n=n, subject=check.describe(case), detail=detail)
                    )
        report.wall_time = time.perf_counter() - start

        if report.failures:
            logger.warning(f"{name}: {len(report.failures)} of {report.instances} instances failed")
        else:
            logger.info(f"{name}: {report.instances} instances passed in {report.wall_time:.2f}s")
        return report

    def run_all(
        self,
        slopes: Optional[Sequence[Tuple[int, int]]] = None,
        n: Optional[int] = None,
        max_size: Optional[int] = None,
    ) -> List[VerificationReport]:
        return [
            self.run(name, self.grid_for(name, slopes=slopes, n=n, max_size=max_size))
            for name in list_check_names()
        ]
