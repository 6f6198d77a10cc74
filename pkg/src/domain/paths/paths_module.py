from dependency_injector import containers, providers
from .services.enumeration_service import EnumerationService


class PathsModule(containers.DeclarativeContainer):
    root = providers.DependenciesContainer()

    enumeration_service = providers.Singleton(
        EnumerationService,
        budget=root.budget,
    )
