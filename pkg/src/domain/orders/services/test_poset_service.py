import json

import pytest

from src.commons.enums.order_enums import OrderKind
from src.commons.exceptions import EnumerationBudgetError
from src.domain.orders.services.poset_service import PosetService
from src.domain.paths.models import Slope
from src.domain.paths.services.enumeration_service import EnumerationService


@pytest.fixture
def poset_service():
    """Servicio de posets sobre un enumerador real."""
    return PosetService(enumerator=EnumerationService(budget=100_000))


# ==================== TESTS DE CONSTRUCCIÓN ====================


def test_young_poset_of_catalan_three(poset_service):
    poset = poset_service.build_poset(Slope(1, 1), 3, OrderKind.YOUNG)
    assert len(poset.elements) == 5
    assert len(poset.covers) == 5
    assert poset.elements == sorted(poset.elements)


def test_tamari_pentagon(poset_service):
    poset = poset_service.build_poset(Slope(1, 1), 3, "rotation")
    pairs = {(poset.elements[x], poset.elements[y]) for x, y in poset.covers}
    assert pairs == {
        ((0, 1, 2), (0, 0, 2)),
        ((0, 1, 2), (0, 1, 1)),
        ((0, 0, 2), (0, 0, 1)),
        ((0, 1, 1), (0, 0, 0)),
        ((0, 0, 1), (0, 0, 0)),
    }


@pytest.mark.parametrize("kind", list(OrderKind))
def test_two_element_family(poset_service, kind):
    poset = poset_service.build_poset(Slope(1, 1), 2, kind)
    assert len(poset.elements) == 2
    assert poset.covers == [(1, 0)]


def test_young_poset_two_three_one(poset_service):
    poset = poset_service.build_poset(Slope(2, 3), 1, OrderKind.YOUNG)
    assert poset.elements == [(0, 0), (0, 1)]
    assert poset.covers == [(1, 0)]


def test_budget_is_respected():
    service = PosetService(enumerator=EnumerationService(budget=3))
    with pytest.raises(EnumerationBudgetError):
        service.build_poset(Slope(1, 1), 3, OrderKind.YOUNG)


# ==================== TESTS DE CONSULTAS ====================


def test_order_queries(poset_service):
    poset = poset_service.build_poset(Slope(1, 1), 3, OrderKind.ROTATION)
    assert poset.leq((0, 1, 2), (0, 0, 0))
    assert not poset.leq((0, 0, 0), (0, 1, 2))
    assert poset.leq((0, 1, 1), (0, 1, 1))
    assert not poset.leq((0, 1, 1), (0, 0, 2))
    assert poset.up_set((0, 1, 1)) == [(0, 0, 0)]
    assert poset.minimal_elements() == [(0, 1, 2)]
    assert poset.maximal_elements() == [(0, 0, 0)]
    assert poset.is_acyclic()


@pytest.mark.parametrize("slope,n", [(Slope(1, 2), 3), (Slope(2, 3), 2), (Slope(2, 1), 3), (Slope(3, 2), 2)])
def test_rotation_refines_young(poset_service, slope, n):
    assert poset_service.rotation_refines_young(slope, n)


@pytest.mark.parametrize("kind", list(OrderKind))
def test_covers_are_graded(poset_service, kind):
    poset = poset_service.build_poset(Slope(2, 3), 2, kind)
    assert poset_service.is_graded_by_area(poset)


def test_cover_differences(poset_service):
    assert poset_service.cover_differences(Slope(1, 2), 3) == {}
    differences = poset_service.cover_differences(Slope(2, 1), 3)
    only_rotation, only_hor = differences[(0, 0, 1, 1, 2, 2)]
    assert (0, 0, 0, 0, 2, 2) in only_rotation
    assert (0, 0, 0, 1, 2, 2) in only_hor


# ==================== TESTS DE EXPORTACIÓN ====================


def test_json_export(poset_service):
    poset = poset_service.build_poset(Slope(1, 1), 2, OrderKind.YOUNG)
    payload = json.loads(poset.to_json())
    assert payload["elements"] == [[0, 0], [0, 1]]
    assert payload["covers"] == [[1, 0]]
    assert payload["kind"] == "young"


def test_dot_export(poset_service):
    dot = poset_service.build_poset(Slope(1, 1), 3, OrderKind.YOUNG).to_dot()
    assert dot.startswith('digraph young_1_1_3 {')
    assert 'graph [rankdir=BT]' in dot
    assert 'p4 [label="(0,1,2)"]' in dot
    assert dot.count("->") == 5
