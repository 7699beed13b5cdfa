from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Generic, TypeVar

T = TypeVar("T")


class Status(str, Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower-bound"
    UNVERIFIED = "unverified"

    @staticmethod
    def combine(*statuses: "Status") -> "Status":
        """Weakest status wins: unverified < lower-bound < exact."""
        if Status.UNVERIFIED in statuses:
            return Status.UNVERIFIED
        if Status.LOWER_BOUND in statuses:
            return Status.LOWER_BOUND
        return Status.EXACT


@dataclass(frozen=True)
class StatusTagged(Generic[T]):
    """A value together with how much we actually know about it.

    ``certificate`` records the checks that justify ``EXACT``; an exact value
    without a certificate is rejected at construction.
    """

    value: T
    status: Status
    certificate: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status is Status.EXACT and not self.certificate:
            raise ValueError("exact status requires a certificate")

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT
