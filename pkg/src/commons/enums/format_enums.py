from enum import Enum


class OutputFormat(str, Enum):
    WORD = "word"
    JSON = "json"
    DOT = "dot"


class ObjectKind(str, Enum):
    WORD = "word"
    STEP = "step"
    HEIGHT = "height"
    STIRLING = "stirling"
    PAREN = "paren"
    TUPLE = "tuple"


class DotKind(str, Enum):
    POSET = "poset"
    ARYTREE = "arytree"
    PLANETREE = "planetree"
    BINTREE = "bintree"


class DecompositionKind(str, Enum):
    DELTA = "delta"
    THETA = "theta"
    ALPHA_I = "alpha_I"
    ALPHA_II = "alpha_II"
    V_SEQUENCES = "v"
