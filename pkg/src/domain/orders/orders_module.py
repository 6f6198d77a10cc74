from dependency_injector import containers, providers
from .services.poset_service import PosetService


class OrdersModule(containers.DeclarativeContainer):
    root = providers.DependenciesContainer()

    poset_service = providers.Factory(
        PosetService,
        enumerator=root.enumeration_service,
    )
