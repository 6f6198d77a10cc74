import json

import pytest

from src.domain.paths.services.enumeration_service import EnumerationService
from src.domain.verification.checks import checks
from src.domain.verification.checks.base import PropositionCheck
from src.domain.verification.dtos.config_dto import CheckGridDTO
from src.domain.verification.services.registry import get_check_class, list_check_names
from src.domain.verification.services.verification_service import VerificationService


@pytest.fixture
def service():
    """Servicio de verificación con presupuesto de pruebas."""
    return VerificationService(EnumerationService(budget=100_000), max_size=6)


# ==================== TESTS DE REGISTRO ====================


def test_registry_names_match_configs():
    for name, check_cls in checks.items():
        assert issubclass(check_cls, PropositionCheck)
        assert check_cls.get_config().name == name


def test_registry_is_listed_sorted():
    names = list_check_names()
    assert names == sorted(names)
    assert len(names) >= 20
    assert "rot-equivalence" in names and "duality" in names


def test_unknown_check():
    with pytest.raises(KeyError, match="no encontrado"):
        get_check_class("no-such-check")


def test_list_checks_carries_claims(service):
    configs = service.list_checks()
    assert [c.name for c in configs] == list_check_names()
    assert all(c.claim and c.reference for c in configs)


# ==================== TESTS DE GRILLA ====================


def test_default_grid(service):
    grid = service.grid_for("duality")
    assert grid.max_size == 6
    assert grid.n is None
    assert (1, 2) in grid.slopes


def test_grid_overrides(service):
    grid = service.grid_for("rot-equivalence", slopes=[(2, 1)], n=3, max_size=9)
    assert grid.slopes == [(2, 1)]
    assert grid.n == 3
    assert grid.max_size == 9


def test_inapplicable_slopes_are_skipped(service):
    report = service.run("zeta-bijection", CheckGridDTO(slopes=[(2, 3)], max_size=10))
    assert report.instances == 0
    assert report.status == "pass"


# ==================== TESTS DE EJECUCIÓN ====================


def test_rotation_equivalence_passes_below_the_diagonal(service):
    report = service.run("rot-equivalence", service.grid_for("rot-equivalence", slopes=[(2, 3)], n=2))
    assert report.status == "pass"
    assert report.instances > 0


def test_rotation_equivalence_fails_above_the_diagonal(service):
    report = service.run("rot-equivalence", service.grid_for("rot-equivalence", slopes=[(2, 1)], n=3))
    assert report.status == "fail"
    failure = next(f for f in report.failures if f.subject == "NNENNENNE")
    assert (failure.a, failure.b, failure.n) == (2, 1, 3)
    assert "(0, 0, 0, 1, 2, 2)" in failure.detail


def test_family_checks_count_one_instance_per_size(service):
    report = service.run("fuss-catalan", CheckGridDTO(slopes=[(1, 2)], max_size=9))
    assert report.instances == 3
    assert report.status == "pass"


@pytest.mark.parametrize("name", sorted(checks))
def test_every_check_passes_on_small_families(service, name):
    report = service.run(name)
    assert report.status == "pass", report.summary_lines()


def test_run_all_is_ordered_by_name(service):
    reports = service.run_all(max_size=4)
    assert [r.check for r in reports] == list_check_names()


# ==================== TESTS DE REPORTE ====================


def test_report_payload_leaves_out_wall_time(service):
    report = service.run("tr-lemma")
    payload = json.loads(report.to_json())
    assert payload["status"] == "pass"
    assert payload["failures"] == []
    assert "wall_time" not in payload
    assert report.wall_time >= 0


def test_summary_lines(service):
    report = service.run("rot-equivalence", service.grid_for("rot-equivalence", slopes=[(2, 1)], n=3))
    lines = report.summary_lines(limit=1)
    assert lines[0].startswith("rot-equivalence: FAIL")
    assert lines[1].startswith("  (2,1) n=3 ")
