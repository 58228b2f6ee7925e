"""Exception hierarchy shared by every module of the package."""


class TreeError(Exception):
    """Base class for all errors raised by descent_trees."""


class DomainError(TreeError, ValueError):
    """A label does not belong to the domain of the system it was given to."""


class RootHasNoParent(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class InvalidMatrix(DomainError):
    pass


class InvalidPair(DomainError):
    pass


class NotPythagorean(DomainError):
    pass


class NotPrimitive(DomainError):
    pass


class NotPerfectSquare(DomainError):
    pass


class LabelParseError(DomainError):
    pass


class BrokenSystem(TreeError):
    """A descent step failed to decrease the weight, or never reached the root."""


class UnboundedDegree(TreeError):
    pass


class IncompatibleSystems(TreeError):
    pass


class UnknownSystem(TreeError, KeyError):
    def __str__(self):
        # KeyError wraps its message in quotes otherwise
        return Exception.__str__(self)


class NotTyped(TreeError):
    """Two nodes of one type have different child-type counts.

    ``witness`` holds the two offending nodes.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ClassUnobserved(TreeError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DimensionMismatch(TreeError, ValueError):
    pass
