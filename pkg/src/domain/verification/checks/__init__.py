from .paths_checks import FussCatalanCheck, SequenceRoundTripCheck
from .orders_checks import RotationEquivalenceCheck, RotationRefinesYoungCheck
from .stirling_checks import (
    ChiYoungCheck,
    StirlingAvoidersCheck,
    StirlingRotationCheck,
    ZetaBijectionCheck,
)
from .trees_checks import EtaPreorderCheck, TreeRotationCheck, XiBijectionCheck
from .paren_checks import (
    AdmissibleCountCheck,
    AlphaBijectionCheck,
    AlphaIIBalancedCheck,
    BarComponentsCheck,
    GammaAdmissibleCheck,
    ParenInverseCheck,
    TupleRotationCheck,
    TypeIIToICheck,
    YoungDiagramCheck,
)
from .strips_checks import MuZetaCheck, StripDecompositionCheck, StripExtractionCheck
from .bintrees_checks import (
    BqpWordsCheck,
    DualityCheck,
    DualSplitCheck,
    DWordsCheck,
    TrLemmaCheck,
)

checks = {
    "fuss-catalan": FussCatalanCheck,
    "sequence-round-trip": SequenceRoundTripCheck,
    "rot-equivalence": RotationEquivalenceCheck,
    "rotation-refines-young": RotationRefinesYoungCheck,
    "zeta-bijection": ZetaBijectionCheck,
    "stirling-avoiders": StirlingAvoidersCheck,
    "chi-young": ChiYoungCheck,
    "stirling-rotation": StirlingRotationCheck,
    "xi-bijection": XiBijectionCheck,
    "tree-rotation": TreeRotationCheck,
    "eta-preorder": EtaPreorderCheck,
    "alpha-bijection": AlphaBijectionCheck,
    "paren-inverse": ParenInverseCheck,
    "gamma-admissible": GammaAdmissibleCheck,
    "admissible-count": AdmissibleCountCheck,
    "alpha-II-balanced": AlphaIIBalancedCheck,
    "alpha-II-bar": BarComponentsCheck,
    "type-II-to-I": TypeIIToICheck,
    "tuple-rotation": TupleRotationCheck,
    "young-diagram": YoungDiagramCheck,
    "strips-extract": StripExtractionCheck,
    "stripdec": StripDecompositionCheck,
    "mu-zeta": MuZetaCheck,
    "tr-lemma": TrLemmaCheck,
    "bqp-words": BqpWordsCheck,
    "d-words": DWordsCheck,
    "duality": DualityCheck,
    "dual-split": DualSplitCheck,
}

__all__ = ["checks"]
