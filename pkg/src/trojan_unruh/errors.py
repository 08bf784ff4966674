class DomainError(ValueError):
    """Input outside the domain where a quantity is defined."""


class BorderSingularityError(DomainError):
    """Quantity diverges at an edge of the stability window (B = 0 or A = B = 0)."""
