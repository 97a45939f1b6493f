"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid configuration or malformed input artifact."""


class DegenerateBeliefError(RuntimeError):
    """Every candidate object was assigned zero likelihood."""


class ScheduleError(LookupError):
    """A round index fell outside the expert schedule."""


class EpisodeCompleteError(RuntimeError):
    """Attempted to step an episode past its horizon."""


class SequencingError(RuntimeError):
    """A pipeline stage ran before its prerequisites existed."""
