from dependency_injector import containers, providers
from .services.stirling_order_service import StirlingOrderService


class StirlingModule(containers.DeclarativeContainer):
    root = providers.DependenciesContainer()

    order_service = providers.Factory(
        StirlingOrderService,
        enumerator=root.enumeration_service,
    )
