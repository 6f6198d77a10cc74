from dataclasses import dataclass
from typing import Optional

from dependency_injector import providers
from src.application.container import container as root_container
from src.domain.orders.orders_module import OrdersModule
from src.domain.paths.paths_module import PathsModule
from src.domain.stirling.stirling_module import StirlingModule
from src.domain.verification.verification_module import VerificationModule


@dataclass
class RegisteredModules:
    paths: PathsModule
    orders: OrdersModule
    stirling: StirlingModule
    verification: VerificationModule


def register_modules(budget: Optional[int] = None, max_size: Optional[int] = None) -> RegisteredModules:
    # Register Paths Module
    paths_module = PathsModule(
        root=providers.DependenciesContainer(
            budget=providers.Object(budget) if budget is not None else root_container.budget,
        )
    )

    # Register Orders Module
    orders_module = OrdersModule(
        root=providers.DependenciesContainer(
            enumeration_service=paths_module.enumeration_service,
        )
    )

    # Register Stirling Module
    stirling_module = StirlingModule(
        root=providers.DependenciesContainer(
            enumeration_service=paths_module.enumeration_service,
        )
    )

    # Register Verification Module
    verification_module = VerificationModule(
        root=providers.DependenciesContainer(
            enumeration_service=paths_module.enumeration_service,
            max_size=providers.Object(max_size) if max_size is not None else root_container.max_size,
        )
    )

    return RegisteredModules(
        paths=paths_module,
        orders=orders_module,
        stirling=stirling_module,
        verification=verification_module,
    )
