from enum import Enum


class OrderKind(str, Enum):
    YOUNG = "young"
    ROTATION = "rotation"
    ROTATION_HOR = "rotation_hor"


class ReferencePath(str, Enum):
    LOWEST = "lowest"
    HIGHEST = "highest"
