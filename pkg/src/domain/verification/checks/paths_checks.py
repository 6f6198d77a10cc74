from typing import Iterable, Optional

from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import (
    fuss_catalan,
    height_seq_to_word,
    step_seq_to_word,
    word_to_height_seq,
    word_to_step_seq,
)
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckConfigDTO


class FussCatalanCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="fuss-catalan",
        claim="The (1,b)-Dyck paths of size n are counted by 1/(bn+1)·C((b+1)n, n)",
        reference="Fuss-Catalan count of (1,b)-paths",
        applies_to="unit_a",
        slopes=[(1, 1), (1, 2), (1, 3)],
    )

    def cases(self, slope: Slope, n: int) -> Iterable[int]:
        return [n]

    def describe(self, case: int) -> str:
        return f"size {case}"

    def verify(self, case: int, slope: Slope, n: int) -> Optional[str]:
        count = sum(1 for _ in self.enumerator.enumerate_paths(slope, n))
        expected = fuss_catalan(slope.b, n)
        if count != expected:
            return f"enumerated {count}, formula gives {expected}"
        return None


class SequenceRoundTripCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="sequence-round-trip",
        claim="Words, step sequences and height sequences determine each other",
        reference="step and height sequence encodings",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        if step_seq_to_word(u, slope) != case:
            return f"step sequence {u} does not rebuild the word"
        h = word_to_height_seq(case)
        if height_seq_to_word(h, slope) != case:
            return f"height sequence {h} does not rebuild the word"
        return None
