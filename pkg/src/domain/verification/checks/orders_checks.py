from typing import Optional

from src.domain.orders.covers import rotation_cover_seqs, rotation_covers, rotation_covers_hor
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import step_seq_to_word, word_to_step_seq, young_leq
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckConfigDTO


class RotationEquivalenceCheck(PropositionCheck):
    """
    Las dos definiciones de rotación coinciden si a < b.

    For a > b they may differ; running the check there reports the
    differing paths instead of skipping them.
    """

    CONFIG = CheckConfigDTO(
        name="rot-equivalence",
        claim="Primitive-subsequence and horizontal-distance rotations give the same covers when a < b",
        reference="equivalence of the two rotation orders",
        slopes=[(1, 1), (1, 2), (1, 3), (2, 3), (2, 5), (3, 4)],
        metadata={"expected_to_fail_for_a_above_b": True},
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        by_rotation = {word_to_step_seq(p) for p in rotation_covers(case)}
        by_hor = {word_to_step_seq(p) for p in rotation_covers_hor(case)}
        if by_rotation != by_hor:
            return (
                f"primitive only {sorted(by_rotation - by_hor)}, "
                f"horizontal only {sorted(by_hor - by_rotation)}"
            )
        return None


class RotationRefinesYoungCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="rotation-refines-young",
        claim="Every rotation cover lies above its path in the Young order",
        reference="rotation order is an extension of the Young order",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        for v in rotation_cover_seqs(word_to_step_seq(case), slope):
            if not young_leq(case, step_seq_to_word(v, slope)):
                return f"cover {v} is not Young-above"
        return None
