import pytest

from src.commons.exceptions import InvalidObjectError
from src.commons.testing import SMALL_SLOPES
from src.domain.paren.models import DyckTuple
from src.domain.paren.presentation import alpha_II
from src.domain.paths.models import DyckWord, Slope
from src.domain.paths.sequences import highest_path, step_seq_to_word, word_to_height_seq, word_to_step_seq
from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.stirling.maps import zeta
from src.domain.strips.decompositions import (
    bar_components,
    delta,
    enlarge,
    enlarged_path_bar,
    interleave_extract,
    theta,
)


@pytest.fixture
def sample_path():
    """Camino (2,3) de tamaño 2 con sucesión de pasos (0,1,2,4)."""
    return step_seq_to_word((0, 1, 2, 4), Slope(2, 3))


@pytest.fixture
def small_path():
    """Camino NENEE de pendiente (2,3)."""
    return DyckWord.parse("NENEE", Slope(2, 3))


def _families(max_weight=12):
    for slope in SMALL_SLOPES:
        n = 1
        while (slope.a + slope.b) * n <= max_weight:
            yield slope, n
            n += 1


# ==================== TESTS DE DELTA ====================


def test_delta_of_sample_path(sample_path):
    heights = tuple(word_to_height_seq(q) for q in delta(sample_path).words)
    assert heights == ((1, 2, 3, 4), (1, 3, 3, 4), (2, 3, 4, 4))


def test_delta_of_highest_path():
    slope = Slope(2, 3)
    t = delta(highest_path(slope, 2))
    assert t.as_parens() == ("(((())))",) * 3


def test_delta_of_classical_path_is_itself():
    q = DyckWord.dyck11("NNENEE")
    assert delta(q).words == (q,)


# ==================== TESTS DE THETA ====================


def test_theta_of_sample_path(sample_path):
    assert theta(sample_path).step_seqs() == ((0, 0, 1, 2, 2, 4), (0, 1, 1, 2, 4, 4))


def test_theta_of_highest_path():
    assert theta(highest_path(Slope(3, 2), 2)).step_seqs() == ((0, 0, 0, 0),) * 3


def test_theta_of_small_path(small_path):
    assert theta(small_path).step_seqs() == ((0, 0, 1), (0, 1, 1))


# ==================== TESTS DE CAMINO AGRANDADO ====================


def test_enlarge_small_path(small_path):
    assert enlarge(small_path).steps == "NNNEENNNEEEE"


def test_extract_small_path(small_path):
    big = enlarge(small_path)
    assert tuple(w.steps for w in interleave_extract(big, 3).words) == ("NENE", "NENE", "NNEE")
    assert tuple(w.steps for w in interleave_extract(big, 2).words) == ("NNENEE", "NENNEE")


def test_enlarge_classical_path():
    assert enlarge(DyckWord.dyck11("NE")).steps == "NE"
    assert interleave_extract(DyckWord.dyck11("NE"), 1).as_parens() == ("()",)


def test_extract_needs_a_divisor():
    with pytest.raises(InvalidObjectError):
        interleave_extract(DyckWord.dyck11("NENENE"), 2)


# ==================== TESTS DE P̄ ====================


def test_bar_path_of_a_unit_path():
    path = step_seq_to_word((0, 1, 1, 3), Slope(1, 3))
    assert enlarged_path_bar(path).steps == "NNNENNNNNNEENNNEEEEEEEEE"


def test_bar_path_closes_with_east_steps(small_path):
    bar = enlarged_path_bar(small_path)
    assert bar.steps == "NNNENNNEEEEE"
    assert bar.slope == Slope(1, 1) and bar.n == 6


def test_bar_components_of_a_unit_path():
    path = step_seq_to_word((0, 1, 1, 3), Slope(1, 3))
    assert bar_components(path).as_parens() == ("((()()))", "((()()))", "()((()))")


def test_bar_components_are_the_type_II_tuple():
    enumerator = EnumerationService(budget=100_000)
    for slope, n in _families():
        for path in enumerator.enumerate_paths(slope, n):
            assert bar_components(path) == alpha_II(zeta(word_to_step_seq(path), slope.b)), path


# ==================== TESTS DE PROPIEDADES ====================


def test_extraction_reproduces_both_decompositions():
    enumerator = EnumerationService(budget=100_000)
    for slope, n in _families():
        for path in enumerator.enumerate_paths(slope, n):
            big = enlarge(path)
            assert interleave_extract(big, slope.b) == delta(path), path
            assert interleave_extract(big, slope.a) == theta(path), path


def test_decompositions_are_injective():
    enumerator = EnumerationService(budget=100_000)
    for slope, n in _families():
        paths = list(enumerator.enumerate_paths(slope, n))
        assert len({delta(p) for p in paths}) == len(paths)
        assert len({theta(p) for p in paths}) == len(paths)


def test_decompositions_are_young_chains():
    enumerator = EnumerationService(budget=100_000)
    for slope, n in _families():
        for path in enumerator.enumerate_paths(slope, n):
            # q_1 ≤_Y q_2 ≤_Y … for δ, the reverse for θ
            assert DyckTuple(tuple(reversed(delta(path).words))).is_young_chain(), path
            assert theta(path).is_young_chain(), path
