"""Young and rotation moves on Stirling permutations. Positions are 1-based."""
import logging
from typing import List

from src.commons.exceptions import InvalidObjectError
from src.domain.stirling.models import StirlingPerm

logger = logging.getLogger(__name__)


def _ascent(perm: StirlingPerm, i: int) -> tuple[int, int]:
    entries = perm.entries
    if not 1 <= i < len(entries):
        raise InvalidObjectError(f"Position {i} outside 1..{len(entries) - 1}")
    r, s = entries[i - 1], entries[i]
    if r >= s:
        raise InvalidObjectError(f"No ascent at position {i} of {perm}: {r} ≥ {s}")
    return r, s


def young_cover_chi(perm: StirlingPerm, i: int) -> StirlingPerm:
    """
    χ_{r,s}: r^k s^b r^{b−k} ↦ r^{k−1} s^b r^{b−k+1} on the subword of values
    r = π_i and s, the smallest value above r whose copies all sit right of i.
    """
    r, _ = _ascent(perm, i)
    first = {}
    for pos, x in enumerate(perm.entries):
        first.setdefault(x, pos)
    s = min(x for x, pos in first.items() if x > r and pos >= i)
    slots = [pos for pos, x in enumerate(perm.entries) if x in (r, s)]
    k = sum(1 for pos in slots if pos < i - 1 and perm.entries[pos] == r) + 1
    b = perm.b
    shape = [perm.entries[pos] for pos in slots]
    if shape != [r] * k + [s] * b + [r] * (b - k):
        raise InvalidObjectError(f"Values {r},{s} of {perm} do not interleave as r^k s^b r^(b-k)")
    entries = list(perm.entries)
    for pos, value in zip(slots, [r] * (k - 1) + [s] * b + [r] * (b - k + 1)):
        entries[pos] = value
    return StirlingPerm(b=b, entries=tuple(entries))


def rotation_cover_stirling(perm: StirlingPerm, i: int) -> StirlingPerm:
    """
    Mueve π_i justo después de la última aparición j de π_{i+1}, siempre que
    π_k ≥ π_{i+1} para todo k en [i+1, j].
    """
    r, s = _ascent(perm, i)
    entries = list(perm.entries)
    j = len(entries) - entries[::-1].index(s)
    if any(x < s for x in entries[i:j]):
        raise InvalidObjectError(f"A value below {s} sits between positions {i + 1} and {j} of {perm}")
    moved = entries[:i - 1] + entries[i:j] + [r] + entries[j:]
    return StirlingPerm(b=perm.b, entries=tuple(moved))


def chi_covers(perm: StirlingPerm) -> List[StirlingPerm]:
    covers = []
    for i in range(1, len(perm)):
        try:
            covers.append(young_cover_chi(perm, i))
        except InvalidObjectError:
            continue
    return covers


def stirling_rotation_covers(perm: StirlingPerm) -> List[StirlingPerm]:
    covers = []
    for i in range(1, len(perm)):
        try:
            covers.append(rotation_cover_stirling(perm, i))
        except InvalidObjectError:
            continue
    logger.debug(f"{perm} has {len(covers)} rotation covers")
    return covers
