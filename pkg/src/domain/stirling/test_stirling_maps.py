from fractions import Fraction

import pytest

from src.commons.exceptions import EnumerationBudgetError, InvalidObjectError
from src.domain.paths.models import Slope
from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.stirling.maps import (
    avoids_312,
    enumerate_stirling,
    iter_insertion_sequences,
    zeta,
    zeta_g,
    zeta_inverse,
)
from src.domain.stirling.models import StirlingPerm


@pytest.fixture
def enumerator():
    """Enumerador con presupuesto de pruebas."""
    return EnumerationService(budget=100_000)


# ==================== TESTS DEL MODELO ====================


def test_parse_and_print():
    perm = StirlingPerm.parse("122133", b=2)
    assert perm.n == 3
    assert str(perm) == "122133"


def test_nesting_rule_is_enforced():
    with pytest.raises(InvalidObjectError):
        StirlingPerm.parse("1212", b=2)


def test_multiplicities_are_enforced():
    with pytest.raises(InvalidObjectError):
        StirlingPerm.parse("112", b=2)
    with pytest.raises(InvalidObjectError):
        StirlingPerm.parse("1133", b=2)


def test_large_values_print_with_commas():
    perm = zeta((0,) * 10, 1)
    assert str(perm) == "10,9,8,7,6,5,4,3,2,1"
    assert StirlingPerm.parse(str(perm), b=1) == perm


def test_unreadable_text():
    with pytest.raises(InvalidObjectError):
        StirlingPerm.parse("1a1", b=2)


# ==================== TESTS DE ZETA ====================


@pytest.mark.parametrize(
    "u,b,expected",
    [
        ((0, 1, 4), 2, "122133"),
        ((0,), 3, "111"),
        ((0, 0, 4, 2), 3, "224442133311"),
        ((0, 1, 2, 4), 3, "123344432211"),
        ((0, 0, 1, 4), 3, "233344422111"),
        ((0, 0, 1, 3), 3, "233444322111"),
    ],
)
def test_zeta_goldens(u, b, expected):
    assert str(zeta(u, b)) == expected


def test_zeta_accepts_non_monotone_sequences():
    assert zeta_inverse(zeta((0, 0, 4, 2), 3)) == (0, 0, 4, 2)


def test_zeta_rejects_missing_position():
    with pytest.raises(InvalidObjectError):
        zeta((0, 5), 2)
    with pytest.raises(InvalidObjectError):
        zeta((1,), 2)


@pytest.mark.parametrize(
    "text,b,expected",
    [("122133", 2, (0, 1, 4)), ("111", 3, (0,)), ("123344432211", 3, (0, 1, 2, 4))],
)
def test_zeta_inverse_goldens(text, b, expected):
    assert zeta_inverse(StirlingPerm.parse(text, b)) == expected


@pytest.mark.parametrize("n,b", [(4, 1), (4, 2), (3, 3)])
def test_zeta_round_trip(n, b):
    for u in iter_insertion_sequences(n, b):
        assert zeta_inverse(zeta(u, b)) == u


def test_zeta_g_goldens():
    assert str(zeta_g((0, 1, 1, 3), 2, 3)) == "113332444221"
    assert str(zeta_g((0, 0, 2, 1), 2, 3)) == "224442133311"
    assert zeta_g((0, 1, 4), 1, 2) == zeta((0, 1, 4), 2)
    assert zeta_g((0, 2), Fraction(1, 2), 2) == zeta((0, 1), 2)


def test_zeta_g_rejects_fractional_positions():
    with pytest.raises(InvalidObjectError):
        zeta_g((0, 1), Fraction(1, 2), 2)


# ==================== TESTS DE PATRONES ====================


def test_avoids_312_examples():
    assert avoids_312(StirlingPerm.parse("122133", 2))
    assert not avoids_312(StirlingPerm.parse("133122", 2))
    assert avoids_312(StirlingPerm.parse("111", 3))
    assert not avoids_312((3, 1, 2))
    assert avoids_312((2, 3, 1))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_path_images_avoid_312(enumerator, m):
    for n in range(1, 6):
        for u in enumerator.enumerate_step_seqs(Slope(1, m), n):
            assert avoids_312(zeta(u, m)), u


def test_avoiders_are_exactly_the_path_images(enumerator):
    images = {zeta(u, 2) for u in enumerator.enumerate_step_seqs(Slope(1, 2), 3)}
    avoiders = {p for p in enumerate_stirling(3, 2, enumerator) if avoids_312(p)}
    assert images == avoiders
    assert len(avoiders) == 12


# ==================== TESTS DE ENUMERACIÓN ====================


@pytest.mark.parametrize("n,b,count", [(3, 2, 15), (1, 4, 1), (2, 3, 4), (4, 1, 24)])
def test_enumerate_stirling_counts(enumerator, n, b, count):
    perms = list(enumerate_stirling(n, b, enumerator))
    assert len(perms) == count
    assert len(set(perms)) == count


def test_enumerate_stirling_budget():
    with pytest.raises(EnumerationBudgetError):
        list(enumerate_stirling(3, 2, EnumerationService(budget=10)))
