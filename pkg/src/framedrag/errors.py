"""Error types shared across the package."""


class GuardViolation(ValueError):
    """An approximation was requested outside its guarded range.

    Raised by operations that implement truncated expansions (weak-field
    light speeds, narrowband detection probabilities).  Callers that know
    what they are doing can pass ``force=True`` to the guarded operation,
    or ``--override-guards`` on the command line.
    """
