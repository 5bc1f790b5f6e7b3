"""Shared exception types."""


class TheoremViolation(ArithmeticError):
    """An identity the package treats as established failed to hold.

    Raised only from code paths that must never fire on a correct build;
    seeing one means a bug (or an injected mutation) upstream.
    """


class WorkBoundExceeded(RuntimeError):
    """A brute-force enumeration refused to start: the search space is too big."""
