"""Numerics for Hurwitz zeta derivatives, generalized Stieltjes constants and
Abel-regularized trigonometric Dirichlet series, plus an identity checker."""

from .context import (
    DEFAULT_CONTEXT,
    ConvergenceError,
    DomainError,
    EvalContext,
    PoleError,
    RealValue,
    UnknownIdentityError,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONTEXT",
    "ConvergenceError",
    "DomainError",
    "EvalContext",
    "PoleError",
    "RealValue",
    "UnknownIdentityError",
    "__version__",
]
