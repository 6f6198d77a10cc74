"""Hypothesis strategies shared by the test-suite."""
from hypothesis import strategies as st

from src.domain.paths.models import Slope

SMALL_SLOPES = [Slope(1, 1), Slope(1, 2), Slope(2, 1), Slope(1, 3), Slope(2, 3), Slope(3, 2)]


@st.composite
def step_seqs(draw, slope: Slope, n: int):
    u = []
    for k in range(slope.a * n):
        low = u[-1] if u else 0
        u.append(draw(st.integers(min_value=low, max_value=(slope.b * k) // slope.a)))
    return tuple(u)


@st.composite
def sized_step_seqs(draw, slopes=SMALL_SLOPES, max_n: int = 3):
    slope = draw(st.sampled_from(slopes))
    n = draw(st.integers(min_value=0, max_value=max_n))
    return slope, n, draw(step_seqs(slope, n))
