from typing import Iterator, Optional, Tuple

from src.domain.bintrees.construction import build_bqp, d_words_of_path, dual_trees, tr
from src.domain.bintrees.words import omega1, omega2, sharp
from src.domain.paren.sequences import gamma_II
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import lowest_step_seq, prefix_dominates, word_to_step_seq
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckConfigDTO

PathPair = Tuple[DyckWord, DyckWord]


class TrLemmaCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="tr-lemma",
        claim="Both walk words of tr(P) are P",
        reference="binary tree of a single path",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        tree = tr(case)
        if omega1(tree) != case.steps or omega2(tree) != case.steps:
            return f"walk words {omega1(tree)}, {omega2(tree)}"
        return None


class BqpWordsCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="bqp-words",
        claim="B(Q, P) built by rotations has walk words Q and P for every Young-comparable pair",
        reference="binary trees of comparable paths",
    )

    def cases(self, slope: Slope, n: int) -> Iterator[PathPair]:
        paths = list(self.enumerator.enumerate_paths(slope, n))
        for upper in paths:
            for lower in paths:
                if prefix_dominates(upper.steps, lower.steps):
                    yield upper, lower

    def describe(self, case: PathPair) -> str:
        return f"{case[0]} over {case[1]}"

    def verify(self, case: PathPair, slope: Slope, n: int) -> Optional[str]:
        upper, lower = case
        tree = build_bqp(upper, lower)
        if omega1(tree) != upper.steps or omega2(tree) != lower.steps:
            return f"walk words {omega1(tree)}, {omega2(tree)}"
        return None


class DWordsCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="d-words",
        claim="The component words of the subdivided tree of P are the balanced splits of u(P) and of the lowest path",
        reference="D-words of a subdivided tree",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        first, second = d_words_of_path(case)
        if first != gamma_II(word_to_step_seq(case), slope.b):
            return f"first words {first}"
        if second != gamma_II(lowest_step_seq(slope, n), slope.b):
            return f"second words {second}"
        return None


class DualityCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="duality",
        claim="ω(𝔟_i) = ω(𝔠_{a+1−i})^♯ for every component tree",
        reference="duality between slope (a,b) and (b,a)",
        applies_to="a_below_b",
        slopes=[(1, 2), (1, 3), (2, 3)],
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        trees = dual_trees(case)
        a = slope.a
        for i in range(1, a + 1):
            b_tree, c_tree = trees.b_trees[i - 1], trees.c_trees[a - i]
            for walk in (omega1, omega2):
                mirrored = sharp(DyckWord.dyck11(walk(c_tree))).steps
                if walk(b_tree) != mirrored:
                    return f"component {i}: {walk(b_tree)} vs {mirrored}"
        return None


class DualSplitCheck(PropositionCheck):
    CONFIG = CheckConfigDTO(
        name="dual-split",
        claim="The dual component trees, last first, carry the balanced split of b·u(P♯)",
        reference="component trees of the dual path",
    )

    def verify(self, case: DyckWord, slope: Slope, n: int) -> Optional[str]:
        c_trees = dual_trees(case).c_trees
        words = tuple(DyckWord.dyck11(omega1(t)) for t in reversed(c_trees))
        dual_u = word_to_step_seq(sharp(case))
        expected = gamma_II(tuple(slope.b * x for x in dual_u), slope.a).words
        if words != expected:
            return f"dual words {[w.steps for w in words]}"
        return None
