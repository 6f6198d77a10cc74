from typing import List, Literal

from pydantic import BaseModel, Field, computed_field

from src.domain.verification.dtos.config_dto import CheckGridDTO


class FailureDTO(BaseModel):
    """Reproducer of one failing instance."""

    a: int
    b: int
    n: int
    subject: str
    detail: str


class VerificationReport(BaseModel):
    check: str
    grid: CheckGridDTO
    instances: int = 0
    failures: List[FailureDTO] = []

    # Metadata, kept out of the payload
    wall_time: float = Field(default=0.0, exclude=True)

    @computed_field
    @property
    def status(self) -> Literal["pass", "fail"]:
        return "fail" if self.failures else "pass"

    def to_json(self) -> str:
        return self.model_dump_json()

    def summary_lines(self, limit: int = 10) -> List[str]:
        lines = [
            f"{self.check}: {self.status.upper()} "
            f"({self.instances} instances, {len(self.failures)} failures)"
        ]
        for failure in self.failures[:limit]:
            lines.append(
                f"  ({failure.a},{failure.b}) n={failure.n} {failure.subject}: {failure.detail}"
            )
        if len(self.failures) > limit:
            lines.append(f"  ... {len(self.failures) - limit} more")
        return lines
