"""The QG-strength parameter bundle and the QG <-> S representation maps.

``beta`` is canonical. theta (degrees), eta and gamma are derived from it once,
at construction:

    beta = tan(theta),  eta = 1/sqrt(1 - beta^2),  gamma = sqrt((1 + beta^2)/(1 - beta^2))

A QG event carries only ``x'``; lifting it into S puts it at ``x = eta x'`` on
the line ``ct = beta x`` (the QG frame's x'-axis seen from S), with the shared
origin at (0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .minkowski import DEFAULT_C, Event, check_c


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not (math.isfinite(beta) and 0.0 <= beta < 1.0):
        raise DomainError(f"beta must satisfy 0 <= beta < 1, got {beta!r}")
    return beta


@dataclass(frozen=True)
class QGStrength:
    beta: float
    theta_deg: float
    eta: float
    gamma: float

    @classmethod
    def from_beta(cls, beta: float) -> "QGStrength":
        beta = _check_beta(beta)
        b2 = beta * beta
        return cls(
            beta=beta,
            theta_deg=math.degrees(math.atan(beta)),
            eta=1.0 / math.sqrt(1.0 - b2),
            gamma=math.sqrt((1.0 + b2) / (1.0 - b2)),
        )

    @classmethod
    def from_theta(cls, theta_deg: float) -> "QGStrength":
        theta_deg = float(theta_deg)
        if not (math.isfinite(theta_deg) and 0.0 <= theta_deg < 45.0):
            raise DomainError(f"theta must satisfy 0 deg <= theta < 45 deg, got {theta_deg!r}")
        return cls.from_beta(math.tan(math.radians(theta_deg)))

    @classmethod
    def from_eta(cls, eta: float) -> "QGStrength":
        eta = float(eta)
        if not (math.isfinite(eta) and eta >= 1.0):
            raise DomainError(f"eta must be >= 1 and finite, got {eta!r}")
        return cls.from_beta(math.sqrt(1.0 - 1.0 / (eta * eta)))

    def to_dict(self) -> dict:
        return {"beta": self.beta, "theta_deg": self.theta_deg, "eta": self.eta, "gamma": self.gamma}


S_REFERENCE = QGStrength.from_beta(0.0)


def strength_from_beta(beta: float) -> QGStrength:
    return QGStrength.from_beta(beta)


def strength_from_theta(theta_deg: float) -> QGStrength:
    return QGStrength.from_theta(theta_deg)


def strength_from_eta(eta: float) -> QGStrength:
    return QGStrength.from_eta(eta)


@dataclass(frozen=True)
class QGEvent:
    x_prime: float

    @property
    def ct_prime(self) -> float:
        return 0.0


@dataclass(frozen=True)
class ScaleUnit:
    s_space_unit: float
    strength: QGStrength

    def __post_init__(self):
        if not self.s_space_unit > 0:
            raise DomainError(f"unit scale must be positive, got {self.s_space_unit!r}")

    @property
    def qg_space_unit(self) -> float:
        return self.strength.gamma * self.s_space_unit


def project_to_qg(e: Event, s: QGStrength) -> QGEvent:
    """Drop the time coordinate and shrink the location by ``eta``."""
    if e.dim != 1:
        raise DomainError(f"projection needs a 1-D event, got dimension {e.dim}")
    return QGEvent(e.x / s.eta)


def lift_to_s(q: QGEvent, s: QGStrength) -> Event:
    x = s.eta * q.x_prime
    return Event.at(x, s.beta * x)


def dt_between(s: QGStrength, dx_prime: float, c: float = DEFAULT_C) -> float:
    """S-space time difference of two QG events ``dx_prime`` apart."""
    return s.eta * s.beta * dx_prime / check_c(c)


def dx_between(s: QGStrength, dx_prime: float) -> float:
    return s.eta * dx_prime


def beta_from(dt: float, dx_prime: float, c: float = DEFAULT_C) -> float:
    """Invert :func:`dt_between` for beta.

    With r = c dt / dx', beta^2/(1 - beta^2) = r^2 gives beta = r / sqrt(1 + r^2).
    """
    c = check_c(c)
    if dt < 0:
        raise DomainError(f"dt must be >= 0, got {dt!r}")
    if dx_prime == 0:
        raise DomainError("dx' = 0 has no beta in [0, 1): it would need beta -> 1")
    r = abs(c * dt / dx_prime)
    if math.isinf(r):
        raise DomainError("c dt / dx' overflows; beta would round to 1")
    beta = r / math.hypot(1.0, r)
    if beta >= 1.0:
        raise DomainError(f"c dt / dx' = {r!r} is too large; beta rounds to 1")
    return beta


def scale_length(length: float, s: QGStrength) -> float:
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length!r}")
    return s.gamma * length
