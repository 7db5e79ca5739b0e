"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: wrong dimension, negative entries, duplicates."""


class PreconditionError(ValueError):
    """An operation was called on arguments that violate its precondition."""


class StateError(RuntimeError):
    """An operation needs a verdict that was not reached.

    The offending verdict is kept on ``self.verdict`` so callers can report it.
    """

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class ConsistencyError(AssertionError):
    """A self-check on a computed certificate failed. Always a bug."""
