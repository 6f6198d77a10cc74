"""Step and height sequences, extremal paths and counting.

Indices are 0-based internally; every public sequence is a plain tuple whose
entry k (0-based) is the 1-based entry k+1.
"""
from math import comb
from typing import Sequence, Tuple

from src.commons.exceptions import InvalidObjectError
from src.domain.paths.models import EAST, NORTH, DyckWord, Point, Slope

StepSeq = Tuple[int, ...]
HeightSeq = Tuple[int, ...]


# ==================== STEP SEQUENCES ====================


def step_seq_violation(u: Sequence[int], slope: Slope) -> str | None:
    a, b = slope.a, slope.b
    if len(u) % a:
        return f"length {len(u)} is not a multiple of a={a}"
    for k, value in enumerate(u):
        if value < 0:
            return f"negative entry at position {k + 1}"
        if k and value < u[k - 1]:
            return f"not weakly increasing at position {k + 1}"
        if a * value > b * k:
            return f"entry {value} at position {k + 1} lies below the line"
    return None


def is_step_seq(u: Sequence[int], slope: Slope) -> bool:
    return step_seq_violation(u, slope) is None


def word_to_step_seq(path: DyckWord) -> StepSeq:
    east = 0
    u = []
    for step in path.steps:
        if step == NORTH:
            u.append(east)
        else:
            east += 1
    return tuple(u)


def step_seq_to_word(u: Sequence[int], slope: Slope) -> DyckWord:
    problem = step_seq_violation(u, slope)
    if problem:
        raise InvalidObjectError(f"Invalid step sequence {tuple(u)} at slope {slope}: {problem}")
    n = len(u) // slope.a
    letters = []
    east = 0
    for value in u:
        letters.append(EAST * (value - east))
        letters.append(NORTH)
        east = value
    letters.append(EAST * (slope.b * n - east))
    return DyckWord(slope=slope, n=n, steps="".join(letters))


# ==================== HEIGHT SEQUENCES ====================


def word_to_height_seq(path: DyckWord) -> HeightSeq:
    north = 0
    h = []
    for step in path.steps:
        if step == EAST:
            h.append(north)
        else:
            north += 1
    return tuple(h)


def height_seq_to_word(h: Sequence[int], slope: Slope) -> DyckWord:
    a, b = slope.a, slope.b
    if len(h) % b:
        raise InvalidObjectError(f"Height sequence length {len(h)} is not a multiple of b={b}")
    n = len(h) // b
    for k, value in enumerate(h, start=1):
        if k > 1 and value < h[k - 2]:
            raise InvalidObjectError(f"Height sequence {tuple(h)} is not weakly increasing")
        # h_k ≥ ⌈k·a/b⌉  ⇔  b·h_k ≥ k·a
        if b * value < k * a:
            raise InvalidObjectError(f"Height {value} at position {k} lies below the line")
    if h and h[-1] > a * n:
        raise InvalidObjectError(f"Height sequence {tuple(h)} exceeds a·n={a * n}")
    letters = []
    north = 0
    for value in h:
        letters.append(NORTH * (value - north))
        letters.append(EAST)
        north = value
    letters.append(NORTH * (a * n - north))
    return DyckWord(slope=slope, n=n, steps="".join(letters))


# ==================== EXTREMAL PATHS ====================


def lowest_step_seq(slope: Slope, n: int) -> StepSeq:
    return tuple((slope.b * k) // slope.a for k in range(slope.a * n))


def lowest_path(slope: Slope, n: int) -> DyckWord:
    return step_seq_to_word(lowest_step_seq(slope, n), slope)


def highest_path(slope: Slope, n: int) -> DyckWord:
    return DyckWord(slope=slope, n=n, steps=NORTH * (slope.a * n) + EAST * (slope.b * n))


# ==================== COUNTING ====================


def fuss_catalan(b: int, n: int) -> int:
    if b < 1 or n < 0:
        raise InvalidObjectError(f"fuss_catalan needs b ≥ 1 and n ≥ 0, got ({b},{n})")
    return comb((b + 1) * n, n) // (b * n + 1)


# ==================== DISTANCES AND COMPARISON ====================


def horizontal_distance(lowest: DyckWord, point: Point) -> int:
    """hor(p) = u₀(p_y + 1) − p_x, with the virtual entry u₀(an+1) = bn at the end point."""
    x, y = point
    u0 = word_to_step_seq(lowest)
    if 0 <= y < len(u0):
        return u0[y] - x
    if y == len(u0):
        return lowest.slope.b * lowest.n - x
    raise InvalidObjectError(f"Point {point} is outside the rows 0..{len(u0)} of the family")


def young_leq(p: DyckWord, q: DyckWord) -> bool:
    """P ≤_Y Q iff u_P ≥ u_Q componentwise (Q sits weakly above P)."""
    if p.slope != q.slope or p.n != q.n:
        return False
    return all(x >= y for x, y in zip(word_to_step_seq(p), word_to_step_seq(q)))


def prefix_dominates(upper: str, lower: str) -> bool:
    """True when every prefix of ``upper`` has at least as many N as the same prefix of ``lower``."""
    if len(upper) != len(lower):
        return False
    balance = 0
    for x, y in zip(upper, lower):
        balance += (x == NORTH) - (y == NORTH)
        if balance < 0:
            return False
    return balance == 0


def is_dyck_word_11(text: str) -> bool:
    """Classical Dyck word check over N/E or '(' / ')'."""
    balance = 0
    for c in text:
        if c in (NORTH, "("):
            balance += 1
        elif c in (EAST, ")"):
            balance -= 1
        else:
            return False
        if balance < 0:
            return False
    return balance == 0
