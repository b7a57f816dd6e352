"""Evaluation settings, value records and error types shared by every module."""

from __future__ import annotations

from dataclasses import asdict, dataclass


class DomainError(ValueError):
    """Argument outside the domain of the requested function."""


class PoleError(DomainError):
    """Argument too close to a pole for the requested method."""


class ConvergenceError(ArithmeticError):
    """A series, limit or quadrature did not reach its error target."""


class UnknownIdentityError(KeyError):
    """Identity id not present in the catalog."""


@dataclass(frozen=True)
class EvalContext:
    abs_tol: float = 1e-10
    max_terms: int = 10**6
    em_order: int = 12
    abel_eps0: float = 0.02
    abel_levels: int = 8
    quad_tol: float = 1e-11

    def __post_init__(self):
        if not self.abs_tol > 0 or not self.quad_tol > 0:
            raise DomainError("abs_tol and quad_tol must be positive")
        if not 0 < self.abel_eps0 <= 0.1:
            raise DomainError("abel_eps0 must lie in (0, 0.1]")
        if not 4 <= self.abel_levels <= 16:
            raise DomainError("abel_levels must lie in [4, 16]")
        if self.em_order < 2 or self.em_order > 30 or self.em_order % 2:
            raise DomainError("em_order must be even and in [2, 30]")
        if self.max_terms < 100:
            raise DomainError("max_terms must be at least 100")

    def as_dict(self):
        return asdict(self)


DEFAULT_CONTEXT = EvalContext()


def resolve(ctx):
    return DEFAULT_CONTEXT if ctx is None else ctx


@dataclass(frozen=True)
class RealValue:
    value: float
    err_estimate: float

    def __float__(self):
        return float(self.value)

    def __add__(self, other):
        if isinstance(other, RealValue):
            return RealValue(self.value + other.value,
                             self.err_estimate + other.err_estimate)
        return RealValue(self.value + other, self.err_estimate)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RealValue):
            return RealValue(self.value - other.value,
                             self.err_estimate + other.err_estimate)
        return RealValue(self.value - other, self.err_estimate)

    def __rsub__(self, other):
        return RealValue(other - self.value, self.err_estimate)

    def __neg__(self):
        return RealValue(-self.value, self.err_estimate)

    def scale(self, c):
        return RealValue(c * self.value, abs(c) * self.err_estimate)
