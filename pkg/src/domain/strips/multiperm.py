"""v-sequences of a path relative to an extremal path, and the permutation μ built from them."""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.commons.enums.order_enums import ReferencePath
from src.commons.exceptions import InvalidObjectError
from src.domain.paths.models import DyckWord
from src.domain.paths.sequences import StepSeq, lowest_step_seq, word_to_step_seq
from src.domain.stirling.models import StirlingPerm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VSequences:
    reference: ReferencePath
    u_prime: StepSeq
    parts: Tuple[Tuple[int, ...], ...]

    @property
    def b(self) -> int:
        return len(self.parts)


def relative_step_seq(path: DyckWord, reference: ReferencePath) -> StepSeq:
    u = word_to_step_seq(path)
    if reference is ReferencePath.HIGHEST:
        return u
    return tuple(x - y for x, y in zip(lowest_step_seq(path.slope, path.n), u))


def v_sequences(path: DyckWord, reference: ReferencePath) -> VSequences:
    """v_i = ⌈(a·u′ − v_1 − … − v_{i−1}) / (b − i + 1)⌉."""
    a, b = path.slope.a, path.slope.b
    u_prime = relative_step_seq(path, reference)
    rest = [a * x for x in u_prime]
    parts = []
    for i in range(1, b + 1):
        share = b - i + 1
        part = tuple((x + share - 1) // share for x in rest)
        parts.append(part)
        rest = [x - y for x, y in zip(rest, part)]
    return VSequences(reference=reference, u_prime=u_prime, parts=tuple(parts))


def eta(v: Sequence[int]) -> Tuple[int, ...]:
    """Para i = n, …, 1, w_i es el (v_i + 1)-ésimo menor elemento que queda en {1, …, n}."""
    remaining = list(range(1, len(v) + 1))
    w = [0] * len(v)
    for i in range(len(v), 0, -1):
        k = v[i - 1]
        if not 0 <= k < len(remaining):
            raise InvalidObjectError(f"Entry v_{i}={k} of {tuple(v)} exceeds {i - 1}")
        w[i - 1] = remaining.pop(k)
    return tuple(w)


def _inverse(w: Sequence[int]) -> List[int]:
    inv = [0] * len(w)
    for position, value in enumerate(w, start=1):
        inv[value - 1] = position
    return inv


def mu(path: DyckWord, reference: ReferencePath) -> StirlingPerm:
    """μ_{b(p−1)+q} = w′_q(p), with w′_q the inverse of η(v_q)."""
    v = v_sequences(path, reference)
    inverses = [_inverse(eta(part)) for part in v.parts]
    entries = [inv[p] for p in range(len(v.u_prime)) for inv in inverses]
    logger.debug(f"μ of {path} relative to the {reference.value} path: {entries}")
    return StirlingPerm(b=path.slope.b, entries=tuple(entries))
