from itertools import product
from typing import Iterable, Optional

from src.domain.orders.covers import rotation_cover_seqs
from src.domain.paren.models import DyckTuple, ParenPres
from src.domain.paren.presentation import (
    alpha_I,
    alpha_II,
    alpha_star,
    alpha_star_inverse,
    paren_from_tuple,
    type_II_to_I,
)
from src.domain.paren.rotation import rotate_paren, rotate_tuple
from src.domain.paren.sequences import beta, gamma, gamma_II, is_admissible
from src.domain.paren.young_diagram import interleave_and_circle
from src.domain.paths.models import ONE_ONE, DyckWord, Slope
from src.domain.paths.sequences import fuss_catalan, word_to_step_seq
from src.domain.paths.services.enumeration_service import iter_words
from src.domain.stirling.maps import enumerate_stirling, zeta
from src.domain.stirling.models import StirlingPerm
from src.domain.strips.decompositions import bar_components
from src.domain.trees.ary_tree import insertions_of_tree
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckConfigDTO

UNIT_SLOPES = [(1, 1), (1, 2), (1, 3)]


def _star_left(pp: ParenPres, i: int) -> bool:
    pos = pp.epsilon(i)
    return pos > 0 and pp.text[pos - 1] == "*"


class AlphaBijectionCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="alpha-bijection",
        claim="α* and its inverse round-trip on the images of paths",
        reference="parenthesis presentation",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        perm = zeta(word_to_step_seq(case), slope.b)
        pp = alpha_star(perm)
        if alpha_star_inverse(str(pp)) != perm:
            return f"{pp} reads back as {alpha_star_inverse(str(pp))}"
        return None


class ParenInverseCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="paren-inverse",
        claim="The presentation is rebuilt from its type I tuple",
        reference="inverse of the type I labelling",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        pp = alpha_star(zeta(word_to_step_seq(case), slope.b))
        rebuilt = paren_from_tuple(alpha_I(pp))
        if rebuilt != pp:
            return f"{pp} rebuilt as {rebuilt}"
        return None


class GammaAdmissibleCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="gamma-admissible",
        claim="γ splits a (1,m) step sequence into an admissible Young chain summing back to it",
        reference="admissible tuples",
        applies_to="unit_a",
        slopes=[(1, 2), (1, 3), (1, 4)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        t = gamma(u, slope.b)
        if beta(t) != u:
            return f"β(γ(u)) = {beta(t)}"
        if not t.is_young_chain():
            return f"{t} is not a Young chain"
        if not is_admissible(t):
            return f"{t} is not admissible"
        return None


class AdmissibleCountCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="admissible-count",
        claim="Admissible m-tuples of Dyck words of size n are counted by the Fuss-Catalan numbers",
        reference="admissible tuples and 312-avoiders",
        applies_to="unit_a",
        slopes=[(1, 1), (1, 2), (1, 3)],
    )

    def cases(self, slope: Slope, n: int) -> Iterable[int]:
        return [n]

    def describe(self, case: int) -> str:
        return f"size {case}"

    def verify(self, case: int, slope: Slope, n: int) -> Optional[str]:
        m = slope.b
        words = list(iter_words(ONE_ONE, n))
        tuples = self.enumerator.bounded(product(words, repeat=m), what="tuples")
        count = sum(1 for combo in tuples if is_admissible(DyckTuple.from_texts(combo)))
        expected = fuss_catalan(m, n)
        if count != expected:
            return f"{count} admissible {m}-tuples, expected {expected}"
        return None


class AlphaIIBalancedCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="alpha-II-balanced",
        claim="The type II tuple of ζ(u) is the balanced split γ^II(u)",
        reference="type II labelling",
        slopes=[(1, 2), (1, 3), (2, 3), (3, 2)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        found = alpha_II(zeta(u, slope.b))
        expected = gamma_II(u, slope.b)
        if found != expected:
            return f"α^II gives {found}, γ^II gives {expected}"
        return None


class BarComponentsCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="alpha-II-bar",
        claim="Reading P̄ with stride b, from offset b−i, gives component i of the type II tuple",
        reference="type II labelling and the enlarged path P̄",
        slopes=[(1, 2), (1, 3), (2, 3), (3, 2)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        found = bar_components(case)
        expected = alpha_II(zeta(word_to_step_seq(case), slope.b))
        if found != expected:
            return f"P̄ gives {found}, α^II gives {expected}"
        return None


class TypeIIToICheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="type-II-to-I",
        claim="Label swaps turn the type II tuple of any tree into its type I tuple",
        reference="type II to type I conversion",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def cases(self, slope: Slope, n: int) -> Iterable[StirlingPerm]:
        return enumerate_stirling(n, slope.b, self.enumerator)

    def verify(self, case: StirlingPerm, slope: Slope, n: int) -> Optional[str]:
        found = type_II_to_I(case)
        expected = alpha_I(case)
        if found != expected:
            return f"swaps end at {found}, type I is {expected}"
        return None


class TupleRotationCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="tuple-rotation",
        claim="Rotating a presentation rotates its type I tuple, and the rotations are the rotation covers",
        reference="rotation on tuples of Dyck words",
        applies_to="unit_a",
        slopes=UNIT_SLOPES,
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        pp = alpha_star(zeta(u, slope.b))
        t = alpha_I(pp)
        images = set()
        for i in range(2, n + 1):
            if not _star_left(pp, i):
                continue
            rotated = rotate_paren(pp, i)
            images.add(insertions_of_tree(rotated.tree))
            if rotate_tuple(t, pp, i, 1) != alpha_I(rotated):
                return f"tuple rotation at {i} disagrees with the presentation"
        expected = set(rotation_cover_seqs(u, slope))
        if images != expected:
            return f"presentations give {sorted(images)}, covers are {sorted(expected)}"
        return None


class YoungDiagramCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="young-diagram",
        claim="Circled hook columns of the interleaved type I tuple transpose to the nonzero entries of u",
        reference="hook lengths of the interleaved diagram",
        slopes=[(1, 1), (1, 2), (1, 3), (2, 3)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        diagram = interleave_and_circle(alpha_I(zeta(u, slope.b)))
        expected = tuple(sorted((x for x in u if x), reverse=True))
        if diagram.transpose != expected:
            return f"transpose {diagram.transpose}, expected {expected}"
        return None
