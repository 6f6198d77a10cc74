from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field

SlopePair = Tuple[int, int]

# any: every slope; unit_a: slopes (1, b); classical: only (1, 1); a_below_b: a < b
Applicability = Literal["any", "unit_a", "classical", "a_below_b"]


class CheckGridDTO(BaseModel):
    slopes: List[SlopePair]
    max_size: int = Field(default=12, ge=2)
    n: Optional[int] = Field(default=None, ge=0)


class CheckConfigDTO(BaseModel):
    name: str
    claim: str
    reference: str
    applies_to: Applicability = "any"
    slopes: List[SlopePair] = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 3), (3, 2)]

    metadata: Optional[Dict[str, Union[str, float, bool]]] = None

    def default_grid(self, max_size: int) -> CheckGridDTO:
        return CheckGridDTO(slopes=list(self.slopes), max_size=max_size)
