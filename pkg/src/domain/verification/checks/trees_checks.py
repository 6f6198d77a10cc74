from typing import Iterable, Optional

from src.commons.enums.order_enums import ReferencePath
from src.domain.orders.covers import rotation_cover_seqs
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import is_step_seq, word_to_step_seq
from src.domain.stirling.maps import enumerate_stirling
from src.domain.stirling.models import StirlingPerm
from src.domain.strips.multiperm import eta, relative_step_seq
from src.domain.trees.ary_tree import (
    insertions_of_tree,
    tree_from_insertions,
    tree_from_walk_word,
    tree_rotation,
    walk_word,
    xi,
    xi_inverse,
)
from src.domain.trees.plane_tree import preorder_word_of_postorder_labels
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckConfigDTO


class XiBijectionCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="xi-bijection",
        claim="ξ is a bijection from b-Stirling permutations to labelled (b+1)-ary trees, recoverable from the walk word",
        reference="Stirling permutations and increasing (b+1)-ary trees",
        applies_to="unit_a",
        slopes=[(1, 1), (1, 2), (1, 3)],
    )

    def cases(self, slope: Slope, n: int) -> Iterable[StirlingPerm]:
        return enumerate_stirling(n, slope.b, self.enumerator)

    def verify(self, case: StirlingPerm, slope: Slope, n: int) -> Optional[str]:
        tree = xi(case)
        if xi_inverse(tree) != case:
            return f"ξ⁻¹ gives {xi_inverse(tree)}"
        word = walk_word(tree)
        if walk_word(tree_from_walk_word(word)) != word:
            return f"walk word {word} does not parse back"
        return None


class TreeRotationCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="tree-rotation",
        claim="Rotations of the insertion tree of u that stay among paths are the rotation covers of u",
        reference="rotation of (b+1)-ary trees",
        applies_to="unit_a",
        slopes=[(1, 1), (1, 2), (1, 3)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        u = word_to_step_seq(case)
        tree = tree_from_insertions(u, slope.b)
        images = {insertions_of_tree(tree_rotation(tree, i)) for i in range(2, n + 1)}
        images = {v for v in images if v != u and is_step_seq(v, slope)}
        expected = set(rotation_cover_seqs(u, slope))
        if images != expected:
            return f"trees give {sorted(images)}, covers are {sorted(expected)}"
        return None


class EtaPreorderCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="eta-preorder",
        claim="η of the step sequence relative to the highest path is the preorder word of the postorder labels",
        reference="plane trees and the η map",
        applies_to="classical",
        slopes=[(1, 1)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        found = eta(relative_step_seq(case, ReferencePath.HIGHEST))
        expected = preorder_word_of_postorder_labels(case)
        if found != expected:
            return f"η gives {found}, labels give {expected}"
        return None
