"""Sequences attached to tuples of classical Dyck words."""
import logging
from typing import List, Sequence, Tuple

from src.commons.exceptions import InvalidObjectError
from src.domain.paren.models import DyckTuple
from src.domain.paths.models import Slope
from src.domain.paths.sequences import StepSeq, step_seq_violation
from src.domain.trees.plane_tree import postorder_word_of_identity_preorder

logger = logging.getLogger(__name__)


def beta(t: DyckTuple) -> StepSeq:
    """Suma componente a componente de las sucesiones de pasos."""
    return tuple(sum(column) for column in zip(*t.step_seqs()))


def second_primitive_subsequence(u: Sequence[int], i: int, b: int) -> int:
    """
    Largest k ≥ i+1 such that u_j − u_i ≤ b(j − i − 1) for every j in (i, k].
    Requires u_i = u_{i+1}; positions are 1-based.
    """
    n = len(u)
    if not 1 <= i < n:
        raise InvalidObjectError(f"Position {i} outside 1..{n - 1}")
    if u[i - 1] != u[i]:
        raise InvalidObjectError(f"u_{i} ≠ u_{i + 1} in {tuple(u)}")
    k = i + 1
    while k < n and u[k] - u[i - 1] <= b * (k - i):
        k += 1
    return k


def _labels(u: Sequence[int], b: int) -> List[int]:
    n = len(u)
    labels = []
    for i in range(1, n + 1):
        if i < n and u[i - 1] == u[i]:
            k = second_primitive_subsequence(u, i, b)
            labels.append(u[i - 1] + b * (k - i))
        else:
            labels.append(u[i - 1])
    return labels


def _rank_below(labels: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(1 for x in labels[:i] if x < value) for i, value in enumerate(labels))


def gamma(u: Sequence[int], m: int) -> DyckTuple:
    """Splits a (1,m) step sequence into m classical step sequences, peeling slope m first."""
    problem = step_seq_violation(u, Slope(1, m))
    if problem:
        raise InvalidObjectError(f"{tuple(u)} is not a (1,{m}) step sequence: {problem}")
    rest = list(u)
    parts: List[StepSeq] = []
    for b in range(m, 1, -1):
        part = _rank_below(_labels(rest, b))
        parts.append(part)
        rest = [x - y for x, y in zip(rest, part)]
    parts.append(tuple(rest))
    return DyckTuple.from_step_seqs(list(reversed(parts)))


def is_admissible(t: DyckTuple) -> bool:
    u = beta(t)
    try:
        return gamma(u, t.m) == t
    except InvalidObjectError:
        return False


def u_from_postorder(t: DyckTuple) -> StepSeq:
    """u_j = Σ_i #{k < j : k precede a j en la palabra post-orden de la componente i}."""
    n = t.n
    total = [0] * n
    for word in t.words:
        post = postorder_word_of_identity_preorder(word)
        seen: List[int] = []
        for label in post:
            total[label - 1] += sum(1 for k in seen if k < label)
            seen.append(label)
    return tuple(total)


def gamma_II(u: Sequence[int], b: int) -> DyckTuple:
    """Reparte u en b partes casi iguales: p_i = ⌈u / i⌉ para i = b, …, 1."""
    rest = list(u)
    parts: List[StepSeq] = []
    for i in range(b, 0, -1):
        part = tuple(-(-x // i) for x in rest)
        parts.append(part)
        rest = [x - y for x, y in zip(rest, part)]
    return DyckTuple.from_step_seqs(list(reversed(parts)))
