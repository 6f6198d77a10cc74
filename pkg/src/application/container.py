from dependency_injector import containers, providers
from src.infrastructure.config.settings import Settings


class Container(containers.DeclarativeContainer):
    config = providers.Singleton(Settings)

    budget = config.provided.budget
    max_size = config.provided.max_size


container = Container()
