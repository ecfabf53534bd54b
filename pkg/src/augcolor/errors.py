"""Exception types shared across the package."""


class AugcolorError(ValueError):
    """Base class for all domain errors raised by this package."""


class InputError(AugcolorError):
    """Malformed input: bad vertex index, self-loop, mismatched sizes, bad file."""


class RegimeError(AugcolorError):
    """A formula was evaluated outside the parameter regime where it is defined
    (e.g. n*p <= 1 makes the phase thresholds degenerate)."""


class DomainError(AugcolorError):
    """A closed-form bound was evaluated outside its mathematical domain
    (e.g. nonpositive denominator)."""


class SizeLimitError(AugcolorError):
    """An exact/brute-force routine was asked to run above its size cap."""


class CampaignError(AugcolorError):
    """A Monte Carlo campaign aborted, e.g. because a trial produced an
    improper coloring. Carries the offending seed for reproduction."""

    def __init__(self, message: str, seed: int | None = None):
        super().__init__(message)
        self.seed = seed
