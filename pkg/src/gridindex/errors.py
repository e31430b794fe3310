"""Exception hierarchy.

Domain errors derive from :class:`DomainError` (CLI exit code 1); malformed
input text or files raise :class:`FormatError` (CLI exit code 2).
"""


class DomainError(ValueError):
    pass


class GridError(DomainError):
    pass


class WalkError(DomainError):
    """A step or vertex pair that does not fit the grid.

    ``position`` is the 0-based index of the offending step (or pair).
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class LSystemError(DomainError):
    pass


class CatalogError(DomainError):
    pass


class FormatError(ValueError):
    pass
