"""Exception types shared across the package."""


class RittLabError(Exception):
    """Base class for all domain errors raised by this package."""


class DegreeTooLow(RittLabError):
    """Input polynomial degree is below what the operation requires."""


class BadDegree(RittLabError):
    """A degree argument is out of range or fails a divisibility requirement."""


class BadParams(RittLabError):
    """Parameters violate a documented precondition (coprimality, range, ...)."""


class NotAnIdentity(RittLabError):
    """The supplied quadruple does not satisfy a o c == b o d."""


class InternalInconsistency(RittLabError):
    """A step that is guaranteed to succeed for valid input failed.

    Seeing this means a bug, not a property of the input.
    """


class SpecialInput(RittLabError):
    """Operation is undefined for conjugates of z^n or +-T_n."""


class InfiniteGroup(RittLabError):
    """The symmetry group is infinite, so the request has no finite answer."""


class BadSubgroup(RittLabError):
    """Requested subgroup order does not divide the group order, or the
    subgroup action cannot be realized by polynomial maps."""


class NotRational(RittLabError):
    """The requested object exists only over an extension of the rationals."""


class EmptyInput(RittLabError):
    """An operation that needs at least one generator received none."""


class ParseError(RittLabError):
    """Syntax error in a polynomial expression, with a character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.message = message
        self.pos = pos
