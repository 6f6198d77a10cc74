from itertools import product

import pytest

from src.commons.exceptions import InvalidObjectError
from src.domain.paren.models import DyckTuple
from src.domain.paren.sequences import (
    beta,
    gamma,
    gamma_II,
    is_admissible,
    second_primitive_subsequence,
    u_from_postorder,
)
from src.domain.paths.models import Slope
from src.domain.paths.sequences import fuss_catalan
from src.domain.paths.services.enumeration_service import EnumerationService, iter_words


@pytest.fixture
def long_sequence():
    """Sucesión de pasos (1,3) de tamaño 10."""
    return (0, 0, 0, 2, 5, 6, 17, 18, 18, 20)


def _tuples(m, n):
    words = list(iter_words(Slope(1, 1), n))
    for combo in product(words, repeat=m):
        yield DyckTuple.from_texts(combo)


# ==================== TESTS DE BETA ====================


def test_beta_sums_components():
    assert beta(DyckTuple.from_texts(["(())()", "()()()"])) == (0, 1, 4)


def test_u_from_postorder_golden():
    assert u_from_postorder(DyckTuple.from_texts(["(())()", "()()()"])) == (0, 1, 4)


def test_u_from_postorder_on_zigzags():
    t = DyckTuple.from_texts(["()()()()"] * 3)
    assert u_from_postorder(t) == (0, 3, 6, 9)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_u_from_postorder_is_beta(n):
    for t in _tuples(2, n):
        assert u_from_postorder(t) == beta(t)


# ==================== TESTS DE SUBSUCESIÓN PRIMITIVA ====================


@pytest.mark.parametrize("i,expected", [(1, 6), (2, 6), (8, 10)])
def test_second_primitive_subsequence(long_sequence, i, expected):
    assert second_primitive_subsequence(long_sequence, i, 3) == expected


def test_second_primitive_needs_a_repeat(long_sequence):
    with pytest.raises(InvalidObjectError):
        second_primitive_subsequence(long_sequence, 3, 3)


# ==================== TESTS DE GAMMA ====================


def test_gamma_small():
    assert gamma((0, 3, 4), 3).step_seqs() == ((0, 1, 1), (0, 1, 1), (0, 1, 2))


def test_gamma_of_long_sequence(long_sequence):
    assert gamma(long_sequence, 3).step_seqs() == (
        (0, 0, 0, 0, 1, 1, 5, 5, 5, 5),
        (0, 0, 0, 1, 2, 2, 6, 6, 6, 7),
        (0, 0, 0, 1, 2, 3, 6, 7, 7, 8),
    )


def test_gamma_rejects_non_paths():
    with pytest.raises(InvalidObjectError):
        gamma((0, 3), 2)


@pytest.mark.parametrize("m,max_n", [(2, 5), (3, 4), (4, 3)])
def test_gamma_splits_into_a_young_chain(m, max_n):
    enumerator = EnumerationService(budget=100_000)
    for n in range(1, max_n + 1):
        for u in enumerator.enumerate_step_seqs(Slope(1, m), n):
            t = gamma(u, m)
            assert beta(t) == u
            assert t.is_young_chain(), u


# ==================== TESTS DE ADMISIBILIDAD ====================


@pytest.mark.parametrize(
    "words,expected",
    [
        (("NNNEEE", "NENENE"), True),
        (("NNENEE", "NNENEE"), True),
        (("NNENEE", "NENNEE"), False),
        (("NNNEEE", "NNEENE"), False),
    ],
)
def test_is_admissible(words, expected):
    assert is_admissible(DyckTuple.from_texts(words)) is expected


def test_admissible_pairs_of_size_three():
    chains = [t for t in _tuples(2, 3) if t.is_young_chain()]
    assert len(chains) == 14
    assert sum(1 for t in chains if is_admissible(t)) == 12


@pytest.mark.parametrize("m,n", [(1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_admissible_tuples_are_counted_by_fuss_catalan(m, n):
    assert sum(1 for t in _tuples(m, n) if is_admissible(t)) == fuss_catalan(m, n)


# ==================== TESTS DE GAMMA II ====================


def test_gamma_II_golden():
    assert gamma_II((0, 1, 1, 3), 3).step_seqs() == ((0, 0, 0, 1), (0, 0, 0, 1), (0, 1, 1, 1))


def test_gamma_II_parts_sum_to_input():
    assert beta(gamma_II((0, 1, 2, 4), 3)) == (0, 1, 2, 4)
