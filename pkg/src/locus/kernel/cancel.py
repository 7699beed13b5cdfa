"""Cooperative cancellation for long Groebner computations.

A computation started inside ``cancellable(event)`` polls the event between
S-pair reductions and raises :class:`Cancelled` once it is set.
"""
import contextvars
import threading
import time
from contextlib import contextmanager

from ..errors import Cancelled

_token: contextvars.ContextVar = contextvars.ContextVar("locus_cancel", default=None)


class CancelToken:
    def __init__(self, event: threading.Event | None = None, deadline: float | None = None):
        self.event = event or threading.Event()
        self.deadline = deadline

    def cancel(self):
        self.event.set()

    def is_set(self) -> bool:
        if self.event.is_set():
            return True
        return self.deadline is not None and time.monotonic() > self.deadline


@contextmanager
def cancellable(token: CancelToken | None = None, timeout: float | None = None):
    if token is None:
        token = CancelToken()
    if timeout is not None:
        token.deadline = time.monotonic() + timeout
    reset = _token.set(token)
    try:
        yield token
    finally:
        _token.reset(reset)


def checkpoint():
    token = _token.get()
    if token is not None and token.is_set():
        raise Cancelled("computation cancelled")
