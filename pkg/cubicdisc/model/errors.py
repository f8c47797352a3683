class CubicDiscError(Exception):
    """Base class for every error raised by cubicdisc."""


class DomainError(CubicDiscError, ValueError):
    """An input lies outside the domain of the operation."""


class UsageError(CubicDiscError, ValueError):
    """A caller asked for something the interface does not offer (e.g. an unknown format)."""


class TheoryViolation(CubicDiscError, RuntimeError):
    """A mathematical guarantee failed to hold; this always signals a bug."""
