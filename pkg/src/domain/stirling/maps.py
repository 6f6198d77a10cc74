"""Insertion map ζ between integer sequences and Stirling permutations."""
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence, Tuple

from src.commons.exceptions import InvalidObjectError
from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.stirling.models import StirlingPerm


def zeta(u: Sequence[int], b: int) -> StirlingPerm:
    """Inserta i^b de modo que exactamente u_i símbolos queden a su izquierda."""
    entries: list[int] = []
    for i, position in enumerate(u, start=1):
        if not 0 <= position <= len(entries):
            raise InvalidObjectError(
                f"Insertion position {position} for value {i} outside 0..{len(entries)}"
            )
        entries[position:position] = [i] * b
    return StirlingPerm(b=b, entries=tuple(entries))


def zeta_inverse(perm: StirlingPerm) -> Tuple[int, ...]:
    u = []
    for i in range(1, perm.n + 1):
        kept = [x for x in perm.entries if x <= i]
        u.append(kept.index(i))
    return tuple(u)


def zeta_g(u: Sequence[int], g: Fraction | int | str, b: int) -> StirlingPerm:
    g = Fraction(g)
    scaled = []
    for value in u:
        scaled_value = g * value
        if scaled_value.denominator != 1:
            raise InvalidObjectError(f"{g}·{value} is not an integer")
        scaled.append(int(scaled_value))
    return zeta(scaled, b)


def avoids_312(perm: StirlingPerm | Sequence[int]) -> bool:
    """True when no positions i<j<k carry values with π_j < π_k < π_i."""
    entries = perm.entries if isinstance(perm, StirlingPerm) else tuple(perm)
    prefix_max = 0
    for j, middle in enumerate(entries):
        if prefix_max > middle + 1:
            if any(middle < x < prefix_max for x in entries[j + 1:]):
                return False
        prefix_max = max(prefix_max, middle)
    return True


def iter_insertion_sequences(n: int, b: int) -> Iterator[Tuple[int, ...]]:
    return product(*(range((i - 1) * b + 1) for i in range(1, n + 1)))


def iter_stirling(n: int, b: int) -> Iterator[StirlingPerm]:
    for u in iter_insertion_sequences(n, b):
        yield zeta(u, b)


def enumerate_stirling(n: int, b: int, enumerator: EnumerationService) -> Iterator[StirlingPerm]:
    return enumerator.bounded(iter_stirling(n, b), what="Stirling permutations")
