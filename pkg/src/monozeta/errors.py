"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MonozetaError(Exception):
    """Base class for all errors raised by :mod:`monozeta`."""


class InvalidSemigroup(MonozetaError, ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NoRepresentation(InvalidSemigroup):
    pass


class GenerationFailed(MonozetaError, RuntimeError):
    pass


class DomainError(MonozetaError, ValueError):
    pass


class NonUnitDenominator(MonozetaError, ValueError):
    pass


class PoleHit(MonozetaError, ZeroDivisionError):
    pass


class ResidueMismatch(MonozetaError, AssertionError):
    pass


class BadCharacteristic(MonozetaError, ValueError):
    pass


class BudgetExceeded(MonozetaError, RuntimeError):
    pass
