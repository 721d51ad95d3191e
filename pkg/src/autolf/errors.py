"""Exception and warning types shared across the package."""


class AutolfError(Exception):
    """Base class for all package errors."""


class DomainError(AutolfError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class PoleError(DomainError):
    """Evaluation was requested at (or numerically on top of) a pole.

    ``where`` describes the offending factor, e.g. ``"Gamma(s), s=-2"``.
    """

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class ConvergenceError(AutolfError):
    """An iterative scheme failed to reach the requested tolerance.

    Carries the best available partial result and its error estimate so
    callers can decide whether the partial answer is still usable.
    """

    def __init__(self, message, partial=None, estimate=None):
        super().__init__(message)
        self.partial = partial
        self.estimate = estimate


class TruncationError(AutolfError):
    """Available coefficient data is too short for the requested tolerance."""


class CacheError(AutolfError, IOError):
    """Base class for coefficient-cache failures."""


class CacheMissError(CacheError):
    """No cache entry exists for the requested key."""


class CacheVersionError(CacheError):
    """Cache entry was written by an incompatible format version."""


class CacheChecksumError(CacheError):
    """Cache entry is corrupt (payload does not match its checksum)."""


class UnderflowWarning(UserWarning):
    """A value underflowed to zero and was flagged rather than raised."""


class NormalizationWarning(UserWarning):
    """Ingested data looks inconsistent with its declared normalization."""


class HeuristicBoundWarning(UserWarning):
    """A reported tail bound is heuristic, not rigorous."""
