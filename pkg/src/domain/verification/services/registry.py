from typing import Dict, List, Type

from src.domain.verification.checks.base import PropositionCheck
from ..checks import checks as _checks_dict

CHECK_REGISTRY: Dict[str, Type[PropositionCheck]] = _checks_dict


def list_check_names() -> List[str]:
    return sorted(CHECK_REGISTRY.keys())


def get_check_class(name: str) -> Type[PropositionCheck]:
    if name not in CHECK_REGISTRY:
        raise KeyError(
            f"Check '{name}' no encontrado en CHECK_REGISTRY"
        )
    return CHECK_REGISTRY[name]
