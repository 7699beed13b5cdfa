"""Exception hierarchy shared by every locus module."""


class LocusError(Exception):
    """Base class for all toolkit errors."""


class InputError(LocusError, ValueError):
    """Malformed or inconsistent input (signature mismatch, bad document...)."""


class ZeroRingError(InputError):
    """Raised where an operation is meaningless on the zero ring."""


class Refused(LocusError):
    """The computation cannot be certified and is refused rather than guessed."""


class InvariantViolation(LocusError, AssertionError):
    """An internal consistency check failed. This always indicates a bug."""


class Cancelled(LocusError):
    """A long-running computation observed a cancellation request."""
