"""Exception hierarchy for anytime-subgradient."""

from typing import Optional


class SubgradientError(Exception):
    """Base class for all library errors."""


class InvalidInputError(SubgradientError, ValueError):
    """A point, shape or sequence length is unusable."""


class InvalidParameterError(SubgradientError, ValueError):
    """A scalar parameter is out of range (eta <= 0, d < 2, alpha <= 2, ...)."""


class UnsupportedError(SubgradientError, NotImplementedError):
    """The requested combination of domain, algorithm or oracle is not supported."""


class NotYetDefinedError(SubgradientError, LookupError):
    """A quantity was requested before the turn that defines it."""


class StreamExhaustedError(SubgradientError, LookupError):
    """A scripted cost stream has no more vectors."""


class UndefinedGapError(SubgradientError, ValueError):
    """A bound needs a positive suboptimality gap."""


class InsufficientDataError(SubgradientError, ValueError):
    """Too few points for a fit."""


class CsvFormatError(SubgradientError, ValueError):
    """A CSV table or config file does not match its contract."""


class TrialError(SubgradientError, RuntimeError):
    """A trial failed; carries the index of the failing trial."""

    def __init__(self, trial_index: int, cause: Optional[BaseException] = None):
        self.trial_index = trial_index
        self.cause = cause
        super().__init__(f"trial {trial_index} failed: {cause}")

    def __reduce__(self):
        return (type(self), (self.trial_index, self.cause))
