"""Exception types raised by the library."""


class MouldError(Exception):
    """Base class for library errors."""


class GroupMismatch(MouldError):
    """Two objects live over different groups."""


class SideMismatch(MouldError):
    """An operator received a mould from the wrong side (u or v)."""


class ArityError(MouldError):
    """Polynomial arity does not match the number of substituted forms."""


class NotDivisible(MouldError):
    """Exact division by a linear form left a remainder."""


class NotSolvable(MouldError):
    """No G with [x, G] = H exists; ``witness`` holds an offending word."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TooLarge(MouldError):
    """The ambient space of a constraint system exceeds the size guard."""


class DepthLimitExceeded(MouldError):
    """An operation would produce components deeper than the depth guard."""


class NotLie(MouldError):
    """An input required to be a Lie element is not one."""
