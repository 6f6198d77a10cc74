from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.paths.models import DyckWord, Slope


class PathDTO(BaseModel):
    """JSON interchange form {"a":2,"b":3,"n":2,"word":"NENENEENEE"}."""

    model_config = ConfigDict(frozen=True)
    a: int = Field(..., ge=1)
    b: int = Field(..., ge=1)
    n: int = Field(..., ge=0)
    word: str

    @model_validator(mode="after")
    def check_word(self):
        self.to_word()
        return self

    @classmethod
    def from_word(cls, path: DyckWord) -> "PathDTO":
        return cls(a=path.slope.a, b=path.slope.b, n=path.n, word=path.steps)

    def to_word(self) -> DyckWord:
        return DyckWord(slope=Slope(self.a, self.b), n=self.n, steps=self.word)
