"""Exact localization of rings at generating sets."""
from .errors import Cancelled, InputError, InvariantViolation, LocusError, Refused, ZeroRingError
from .status import Status, StatusTagged

__version__ = "0.1.0"

__all__ = [
    "Cancelled", "InputError", "InvariantViolation", "LocusError", "Refused",
    "ZeroRingError", "Status", "StatusTagged",
]
