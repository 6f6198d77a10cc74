"""Reading and printing the objects the CLI accepts.

Path-level kinds (word, step, height) live on any slope; tree-level kinds
(stirling, paren, tuple) need a = 1 and go through ζ.
"""
import re
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, TypeAdapter

from src.commons.enums.format_enums import ObjectKind, OutputFormat
from src.commons.exceptions import InvalidObjectError, UsageError
from src.domain.paren.models import DyckTuple
from src.domain.paren.presentation import alpha_I, alpha_star, alpha_star_inverse, paren_from_tuple
from src.domain.paths.dtos.path_dto import PathDTO
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import (
    height_seq_to_word,
    is_step_seq,
    step_seq_to_word,
    word_to_height_seq,
    word_to_step_seq,
)
from src.domain.stirling.maps import zeta, zeta_inverse
from src.domain.stirling.models import StirlingPerm

PATH_KINDS = {ObjectKind.WORD, ObjectKind.STEP, ObjectKind.HEIGHT}

CliObject = Union[DyckWord, StirlingPerm]

_paths_adapter = TypeAdapter(List[PathDTO])
_ints_adapter = TypeAdapter(List[int])
_text_adapter = TypeAdapter(str)


class DecompositionDTO(BaseModel):
    """Salida JSON de decompose: {"kind": ..., "components": [...]}."""

    kind: str
    components: Union[List[List[int]], List[str]]


def parse_ints(text: str) -> Tuple[int, ...]:
    """Acepta "0,1,4", "(0,1,4)", "[0, 1, 4]" o "0 1 4"."""
    body = text.strip().strip("()[]")
    parts = [p for p in re.split(r"[,\s]+", body) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"Cannot read a sequence of integers from {text!r}")


def format_ints(seq) -> str:
    return ",".join(str(x) for x in seq)


def infer_multiplicity(text: str) -> int:
    """b of a Stirling permutation: the number of copies of 1."""
    text = text.strip()
    tokens = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
    return max(1, tokens.count("1"))


def read_object(kind: ObjectKind | str, text: str, a: int = 1, b: Optional[int] = None) -> CliObject:
    kind = ObjectKind(kind)
    slope = Slope(a, 1 if b is None else b)
    if kind == ObjectKind.WORD:
        return DyckWord.parse(text, slope)
    if kind == ObjectKind.STEP:
        return step_seq_to_word(parse_ints(text), slope)
    if kind == ObjectKind.HEIGHT:
        return height_seq_to_word(parse_ints(text), slope)
    if kind == ObjectKind.STIRLING:
        return StirlingPerm.parse(text, infer_multiplicity(text) if b is None else b)
    if kind == ObjectKind.PAREN:
        return alpha_star_inverse(text.strip())
    return alpha_star_inverse(paren_from_tuple(DyckTuple.parse(text)))


def as_path(obj: CliObject) -> DyckWord:
    if isinstance(obj, DyckWord):
        return obj
    u = zeta_inverse(obj)
    slope = Slope(1, obj.b)
    if not is_step_seq(u, slope):
        raise InvalidObjectError(f"{obj} contains 312 and is not the image of a path")
    return step_seq_to_word(u, slope)


def as_stirling(obj: CliObject) -> StirlingPerm:
    if isinstance(obj, StirlingPerm):
        return obj
    if obj.slope.a != 1:
        raise UsageError(f"Stirling permutations, presentations and tuples need a = 1, got slope {obj.slope}")
    return zeta(word_to_step_seq(obj), obj.slope.b)


def render_object(obj: CliObject, kind: ObjectKind | str, fmt: OutputFormat | str = OutputFormat.WORD) -> str:
    kind, fmt = ObjectKind(kind), OutputFormat(fmt)
    as_json = fmt == OutputFormat.JSON
    if kind in PATH_KINDS:
        path = as_path(obj)
        if kind == ObjectKind.WORD:
            return PathDTO.from_word(path).model_dump_json() if as_json else path.steps
        seq = word_to_step_seq(path) if kind == ObjectKind.STEP else word_to_height_seq(path)
        return _ints_adapter.dump_json(list(seq)).decode() if as_json else format_ints(seq)

    perm = as_stirling(obj)
    if kind == ObjectKind.STIRLING:
        return _ints_adapter.dump_json(list(perm.entries)).decode() if as_json else str(perm)
    if kind == ObjectKind.PAREN:
        text = str(alpha_star(perm))
        return _text_adapter.dump_json(text).decode() if as_json else text
    t = alpha_I(perm)
    return t.to_json() if as_json else str(t)


def paths_to_json(paths: List[DyckWord]) -> str:
    return _paths_adapter.dump_json([PathDTO.from_word(p) for p in paths]).decode()


def decomposition_to_json(kind: str, components: List) -> str:
    return DecompositionDTO(kind=kind, components=components).model_dump_json()
