"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied argument (bad index, context mix, malformed config).

    The CLI maps this to exit code 2.
    """


class ConsistencyError(RuntimeError):
    """An internal exact-arithmetic invariant broke (signals a bug, not bad input)."""
