"""Numerical thresholds and their per-context overrides.

Exact arithmetic is assumed by the underlying algebra; these thresholds are
how floating point results get turned back into yes/no decisions.
"""
from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os


@dataclasses.dataclass(frozen=True)
class Tolerances:
    #: pivot threshold, relative to the largest modulus of the working column
    pivot: float = 1e-10
    #: absolute threshold on the modulus of an idempotent component
    zero: float = 1e-10
    #: absolute residual bound for computed solutions
    resid: float = 1e-9

    def __post_init__(self):
        for name in ("pivot", "zero", "resid"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"tolerance {name!r} must be positive, got {value!r}")


def _from_environment() -> Tolerances:
    pivot = os.environ.get("BCX_TOL_PIVOT")
    if pivot:
        return Tolerances(pivot=float(pivot))
    return Tolerances()


_current: contextvars.ContextVar[Tolerances] = contextvars.ContextVar(
    "bcx_tolerances", default=_from_environment()
)


def get_tolerances() -> Tolerances:
    return _current.get()


@contextlib.contextmanager
def tolerance_context(**overrides):
    """Temporarily override thresholds, e.g. ``tolerance_context(pivot=1e-8)``."""
    token = _current.set(dataclasses.replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def resolve(value: float | None, name: str) -> float:
    if value is None:
        return getattr(_current.get(), name)
    if not value > 0:
        raise ValueError(f"tolerance {name!r} must be positive, got {value!r}")
    return value
