"""Exception types shared across the package."""


class QsemiError(Exception):
    """Base class for every package-specific error."""


class ConsistencyError(QsemiError):
    """Two construction routes for the same object disagree."""


class ClosureError(QsemiError):
    """Generator closure produced a group of unexpected size."""


class BadFactor(QsemiError):
    """Rewrite requested at a position that does not hold the claimed factor."""


class ClassTooLarge(QsemiError):
    """Congruence class enumeration exceeded the configured cap."""
