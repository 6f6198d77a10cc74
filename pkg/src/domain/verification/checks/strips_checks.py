from typing import Optional

from src.commons.enums.order_enums import ReferencePath
from src.domain.paren.models import DyckTuple
from src.domain.paths.models import DyckWord, Slope
from src.domain.stirling.maps import zeta_g
from src.domain.strips.decompositions import delta, enlarge, interleave_extract, theta
from src.domain.strips.multiperm import mu, relative_step_seq, v_sequences
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckConfigDTO


class StripExtractionCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="strips-extract",
        claim="Extracting every b-th (a-th) letter pair of the enlarged path gives δ (θ)",
        reference="strip decompositions via the enlarged path",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        big = enlarge(case)
        if interleave_extract(big, slope.b) != delta(case):
            return "extraction with r=b differs from δ"
        if interleave_extract(big, slope.a) != theta(case):
            return "extraction with r=a differs from θ"
        return None


class StripDecompositionCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="stripdec",
        claim="δ has the v-sequences against the highest path as step sequences; δ and θ are Young chains",
        reference="horizontal and vertical strip decompositions",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        horizontal = delta(case)
        parts = v_sequences(case, ReferencePath.HIGHEST).parts
        if parts != horizontal.step_seqs():
            return f"v-sequences {parts}, δ has {horizontal.step_seqs()}"
        if not DyckTuple(tuple(reversed(horizontal.words))).is_young_chain():
            return f"δ = {horizontal} is not a Young chain"
        if not theta(case).is_young_chain():
            return f"θ = {theta(case)} is not a Young chain"
        return None


class MuZetaCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="mu-zeta",
        claim="μ(P, Q) is the scaled insertion ζ_a of the relative step sequence, for both references",
        reference="multipermutations of a path",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        for reference in ReferencePath:
            found = mu(case, reference)
            expected = zeta_g(relative_step_seq(case, reference), slope.a, slope.b)
            if found != expected:
                return f"against {reference.value}: μ = {found}, ζ_a = {expected}"
        return None
