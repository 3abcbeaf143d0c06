"""Exception hierarchy shared by every centset module."""


class CentsetError(Exception):
    """Base class for all library errors."""


class OrderCapExceeded(CentsetError):
    pass


class InvalidPermutation(CentsetError):
    pass


class InvalidGroupTable(CentsetError):
    pass


class NotNormal(CentsetError):
    pass


class InvalidAction(CentsetError):
    pass


class BadParams(CentsetError):
    pass


class NotPrime(BadParams):
    pass


class UnsupportedDegree(BadParams):
    pass


class SearchBudgetExceeded(CentsetError):
    """A bounded search ran out of nodes before reaching a verdict.

    ``best`` optionally carries the best value found so far.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class LatticeBudgetExceeded(CentsetError):
    pass


class ComplementNotFound(CentsetError):
    pass


class GroupFileError(CentsetError):
    pass
