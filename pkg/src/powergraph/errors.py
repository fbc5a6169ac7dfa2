"""Exception types raised across the package."""

from __future__ import annotations


class PowerGraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(PowerGraphError, ValueError):
    pass


class CapacityError(PowerGraphError):
    """A construction would exceed a configured size cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class InvalidGroupError(PowerGraphError, ValueError):
    """A multiplication table fails one of the group axioms."""


class GroupSpecError(PowerGraphError, ValueError):
    """A group expression could not be parsed.

    ``offset`` is the byte offset in the expression where parsing stopped.
    """

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text
