"""Exception types shared across the package."""


class CapdiagError(Exception):
    """Base class for all domain errors raised by this package."""


class NotDominant(CapdiagError):
    """A tuple that should be weakly decreasing is not."""


class InvalidParams(CapdiagError):
    """Parameters violate a documented precondition (s-bounds, wall bounds, ...)."""


class RankTooSmall(CapdiagError):
    """The GL_n rank n is too small for the requested construction."""


class IncompatibleDiagrams(CapdiagError):
    """Two arrow diagrams do not share their single/cross/empty node pattern."""


class ShapeMismatch(CapdiagError):
    """Walled Brauer diagrams of different shapes cannot be multiplied."""


class NotInLambdaRS(CapdiagError):
    """A bipartition is not a valid walled Brauer label for the given (r, s)."""


class NotApplicable(CapdiagError):
    """The walled Brauer decomposition-number routine cannot be applied.

    Carries the violated precondition in ``reason``.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
