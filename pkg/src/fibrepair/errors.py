"""Exception types shared across the package."""


class FibrepairError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(FibrepairError):
    """A computation exceeded an explicit size or time budget.

    Raised instead of silently truncating: callers asked for something the
    implementation refuses to attempt at that scale (e.g. materializing a word
    longer than the configured cap, or an oracle search past its time budget).
    """
