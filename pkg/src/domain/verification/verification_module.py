from dependency_injector import containers, providers
from .services.verification_service import VerificationService


class VerificationModule(containers.DeclarativeContainer):
    root = providers.DependenciesContainer()

    verification_service = providers.Factory(
        VerificationService,
        enumerator=root.enumeration_service,
        max_size=root.max_size,
    )
