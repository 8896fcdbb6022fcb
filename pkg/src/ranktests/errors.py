"""Exception types shared across the package."""


class RankTestError(Exception):
    """Base class for all library errors."""


class TiesError(RankTestError):
    """A data vector contains equal coordinates and tie-breaking is off."""


class NotSubmodularError(RankTestError):
    """An operation required a submodular set function and got one that is not."""


class EnumerationGuardError(RankTestError):
    """An enumeration would exceed its tractability guard."""


class ValidationError(RankTestError):
    """An input object violates a structural invariant (bad partition,
    non-closed statement set, malformed lattice, unknown format, ...)."""
