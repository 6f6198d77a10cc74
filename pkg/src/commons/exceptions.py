class RationalDyckError(Exception):
    """Base de todos los errores del paquete."""


class InvalidObjectError(RationalDyckError, ValueError):
    """A combinatorial object or a map precondition is invalid."""


class IncomparablePathsError(InvalidObjectError):
    """Two paths are not comparable in the Young order."""


class EnumerationBudgetError(RationalDyckError):
    def __init__(self, budget: int, what: str = "objects"):
        self.budget = budget
        self.what = what
        super().__init__(
            f"Enumeration budget of {budget} {what} exceeded; "
            f"raise RDK_BUDGET or --budget to continue"
        )


class UsageError(RationalDyckError):
    """Flags or inputs that do not fit together."""
