"""Events, intervals, boosts and causal classification in flat space-time.

Events store ``ct`` rather than ``t`` so that every coordinate carries length
units; ``c`` only enters when a velocity in absolute units is requested.
Boosts and gradients are restricted to one spatial dimension (the x axis).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    CausalityError,
    DegenerateEventsError,
    DimensionMismatchError,
    DomainError,
)

DEFAULT_C = 1.0
REL_EPS = 1e-12


def check_c(c: float) -> float:
    c = float(c)
    if not (math.isfinite(c) and c > 0):
        raise DomainError(f"speed of light must be positive and finite, got {c!r}")
    return c


@dataclass(frozen=True)
class Event:
    """A point ``(r, ct)`` with a 1 to 3 dimensional spatial part ``r``."""

    r: tuple[float, ...]
    ct: float

    def __post_init__(self):
        r = tuple(float(v) for v in self.r)
        if not 1 <= len(r) <= 3:
            raise DimensionMismatchError(f"spatial dimension must be 1..3, got {len(r)}")
        ct = float(self.ct)
        if not all(math.isfinite(v) for v in (*r, ct)):
            raise DomainError(f"event coordinates must be finite: r={r}, ct={ct}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "ct", ct)

    @classmethod
    def at(cls, x: float, ct: float) -> "Event":
        return cls((x,), ct)

    @property
    def dim(self) -> int:
        return len(self.r)

    @property
    def x(self) -> float:
        return self.r[0]


ORIGIN = Event.at(0.0, 0.0)


class SeparationClass(str, enum.Enum):
    TIME_LIKE = "TimeLike"
    LIGHT_LIKE = "LightLike"
    SPACE_LIKE = "SpaceLike"


@dataclass(frozen=True)
class Separation:
    kind: SeparationClass
    s_squared: float


@dataclass(frozen=True)
class Gradient:
    """Causality gradient |dx|/|dct|; ``inf`` for simultaneous distinct events."""

    value: float
    connected: bool


@dataclass(frozen=True)
class Boost:
    """A boost along x with velocity ``omega_ratio`` = Omega/c."""

    omega_ratio: float

    def __post_init__(self):
        w = float(self.omega_ratio)
        if not (math.isfinite(w) and abs(w) < 1.0):
            raise DomainError(f"|Omega/c| must be < 1, got {w!r}")
        object.__setattr__(self, "omega_ratio", w)

    @property
    def kappa(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.omega_ratio**2)

    @classmethod
    def from_velocity(cls, omega: float, c: float = DEFAULT_C) -> "Boost":
        return cls(omega / check_c(c))


def _same_dim(e1: Event, e2: Event) -> None:
    if e1.dim != e2.dim:
        raise DimensionMismatchError(f"events have spatial dimensions {e1.dim} and {e2.dim}")


def _require_1d(*events: Event) -> None:
    for e in events:
        if e.dim != 1:
            raise DimensionMismatchError(f"operation needs 1-D events, got dimension {e.dim}")


def interval_squared(e1: Event, e2: Event, c: float = DEFAULT_C) -> float:
    """Invariant interval ``c^2 dt^2 - |dr|^2`` between two events."""
    check_c(c)
    _same_dim(e1, e2)
    dct = e1.ct - e2.ct
    dr2 = sum((a - b) ** 2 for a, b in zip(e1.r, e2.r))
    return dct * dct - dr2


def default_eps(e1: Event, e2: Event) -> float:
    # Band scales with the larger of the two cancelling terms.
    dct2 = (e1.ct - e2.ct) ** 2
    dr2 = sum((a - b) ** 2 for a, b in zip(e1.r, e2.r))
    return REL_EPS * max(1.0, dct2, dr2)


def classify(e1: Event, e2: Event, c: float = DEFAULT_C, eps: float | None = None) -> Separation:
    s2 = interval_squared(e1, e2, c)
    if eps is None:
        eps = default_eps(e1, e2)
    elif eps < 0:
        raise DomainError(f"eps must be >= 0, got {eps!r}")
    if s2 > eps:
        kind = SeparationClass.TIME_LIKE
    elif s2 < -eps:
        kind = SeparationClass.SPACE_LIKE
    else:
        kind = SeparationClass.LIGHT_LIKE
    return Separation(kind, s2)


def gradient(origin: Event, a: Event, eps: float = REL_EPS) -> Gradient:
    """Causality gradient from ``origin`` to ``a``; connected iff it is at most 1."""
    _require_1d(origin, a)
    dx = abs(a.x - origin.x)
    dct = abs(a.ct - origin.ct)
    if dct == 0.0:
        if dx == 0.0:
            raise DegenerateEventsError("gradient of identical events is 0/0")
        return Gradient(math.inf, False)
    value = dx / dct
    return Gradient(value, value <= 1.0 + eps)


def boost(e: Event, b: Boost, c: float = DEFAULT_C) -> Event:
    check_c(c)
    _require_1d(e)
    w, k = b.omega_ratio, b.kappa
    return Event.at(k * (e.x - w * e.ct), k * (e.ct - w * e.x))


def simultaneity_velocity(e1: Event, e2: Event, c: float = DEFAULT_C) -> float:
    """Frame velocity Omega in which two space-like events share a time coordinate."""
    _require_1d(e1, e2)
    sep = classify(e1, e2, c)
    if sep.kind is not SeparationClass.SPACE_LIKE:
        raise CausalityError(
            f"events are {sep.kind.value} (s^2={sep.s_squared!r}); making them "
            "simultaneous would require faster-than-light frame motion"
        )
    return c * (e1.ct - e2.ct) / (e1.x - e2.x)


def colocation_velocity(e1: Event, e2: Event, c: float = DEFAULT_C) -> float:
    """Frame velocity Omega in which two time-like events share a location."""
    _require_1d(e1, e2)
    sep = classify(e1, e2, c)
    if sep.kind is not SeparationClass.TIME_LIKE:
        raise CausalityError(
            f"events are {sep.kind.value} (s^2={sep.s_squared!r}); no sub-light "
            "frame places them at the same location"
        )
    return c * (e1.x - e2.x) / (e1.ct - e2.ct)


class AxisLines(NamedTuple):
    """Slopes d(ct)/dx of the boosted frame's axes drawn in (x, ct).

    A vertical ct'-axis (Omega = 0) is reported as ``math.inf``.
    """

    ct_axis_slope: float
    x_axis_slope: float

    @property
    def ct_axis_vertical(self) -> bool:
        return math.isinf(self.ct_axis_slope)


def axis_lines(b: Boost, c: float = DEFAULT_C) -> AxisLines:
    check_c(c)
    w = b.omega_ratio
    ct_slope = math.inf if w == 0.0 else 1.0 / w
    return AxisLines(ct_slope, w)


def calibration_check(e: Event, eps: float = REL_EPS) -> bool:
    """True iff ``e`` lies on the unit hyperbola x^2 - (ct)^2 = 1."""
    _require_1d(e)
    return abs(e.x * e.x - e.ct * e.ct - 1.0) <= eps

