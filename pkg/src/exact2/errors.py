"""Typed errors shared across the library."""


class Exact2Error(Exception):
    """Base class for all library errors."""


class SizeBoundError(Exact2Error):
    """An enumeration or construction would exceed the configured size bound.

    Signals that the instance is too large for the requested operation,
    not that anything is mathematically wrong.
    """

    def __init__(self, what, needed, allowed):
        self.what = what
        self.needed = needed
        self.allowed = allowed
        super().__init__(f"size bound exceeded in {what}: needs {needed}, bound is {allowed}")


class InputError(Exact2Error):
    """Malformed or schema-violating input (CLI / JSON layer)."""


class NotACongruence(Exact2Error):
    """Quotient requested of kernel data that fails the congruence conditions."""

    def __init__(self, verdict):
        self.verdict = verdict
        failed = ", ".join(c.name for c in verdict.failed_conditions)
        super().__init__(f"kernel data is not a congruence (failed: {failed})")


class NotAnEquivalenceRelation(Exact2Error):
    pass


class NotFullyFaithful(Exact2Error):
    pass


class NotFFEquivalenceRelation(Exact2Error):
    pass


class SegalFailure(Exact2Error):
    """A Segal comparison that theory guarantees invertible failed to be so.

    This indicates an implementation bug, never a property of the input;
    it is raised loudly and must not be swallowed.
    """
