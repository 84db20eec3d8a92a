"""Stationary temperature field in a bar made of two materials.

Material A fills ``0 < x < interface`` and has the unknown conductivity
``kappa_A``; material B fills ``interface < x < length`` and has the known
conductivity ``kappa_B``.  The left end is held at ``source_temp`` and the
right end exchanges heat with an ambient fluid at ``ambient_temp`` through
a convection coefficient ``convection``.  Both sections have zero heat
generation, so the exact profile is piecewise linear with a kink at the
interface.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class RodConfig:
    """Fixed, known data of the two-material bar.

    Units: metres, degrees Celsius, W m^-2 C^-1 for ``convection`` and
    W m^-1 C^-1 for ``kappa_B``.
    """

    length: float
    interface: float
    source_temp: float
    ambient_temp: float
    convection: float
    kappa_B: float

    def __post_init__(self):
        for name in ("length", "interface", "source_temp", "ambient_temp",
                     "convection", "kappa_B"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if not 0.0 < self.interface < self.length:
            raise DomainError(
                f"interface must satisfy 0 < interface < length, got "
                f"interface={self.interface}, length={self.length}")
        if self.convection <= 0.0:
            raise DomainError(f"convection must be positive, got {self.convection}")
        if self.kappa_B <= 0.0:
            raise DomainError(f"kappa_B must be positive, got {self.kappa_B}")
        if self.source_temp == self.ambient_temp:
            raise DomainError("source_temp must differ from ambient_temp")

    @property
    def temp_drop(self) -> float:
        """source_temp - ambient_temp; negative when the fluid is hotter."""
        return self.source_temp - self.ambient_temp

    @property
    def tail_length(self) -> float:
        """Length of the material-B section."""
        return self.length - self.interface

    def replace(self, **changes) -> RodConfig:
        return dataclasses.replace(self, **changes)


def _check_kappa(kappa_A):
    if not (kappa_A > 0.0 and math.isfinite(kappa_A)):
        raise DomainError(f"kappa_A must be positive and finite, got {kappa_A!r}")


def composite_conductance(config: RodConfig, kappa_A: float) -> float:
    """zeta = kA kB + kA h L + (kB - kA) h l.

    Evaluated as kA kB + kA h (L - l) + kB h l, a sum of positive terms.
    """
    h = config.convection
    return (kappa_A * config.kappa_B + kappa_A * h * config.tail_length
            + config.kappa_B * h * config.interface)


@dataclass(frozen=True)
class TemperatureProfile:
    """Exact piecewise-linear solution for one value of ``kappa_A``."""

    config: RodConfig
    kappa_A: float
    zeta: float
    slope_left: float
    slope_right: float
    interface_temperature: float

    def __call__(self, x):
        return evaluate_temperature(self, x)


def solve_forward(config: RodConfig, kappa_A: float) -> TemperatureProfile:
    """Build the exact temperature profile for a given ``kappa_A``."""
    _check_kappa(kappa_A)
    h = config.convection
    kB = config.kappa_B
    zeta = composite_conductance(config, kappa_A)
    a = h * (config.ambient_temp - config.source_temp) / zeta
    return TemperatureProfile(
        config=config,
        kappa_A=float(kappa_A),
        zeta=zeta,
        slope_left=kB * a,
        slope_right=kappa_A * a,
        interface_temperature=config.source_temp + kB * a * config.interface,
    )


def evaluate_temperature(profile: TemperatureProfile, x):
    """Temperature at position(s) ``x``; the interface itself uses the left branch.

    Accepts a scalar or an array.  Raises DomainError outside ``[0, length]``.
    """
    cfg = profile.config
    xs = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(xs)) or np.any(xs < 0.0) or np.any(xs > cfg.length):
        raise DomainError(f"x must lie in [0, {cfg.length}], got {x!r}")
    kA, kB = profile.kappa_A, cfg.kappa_B
    a = cfg.convection * (cfg.ambient_temp - cfg.source_temp) / profile.zeta
    left = cfg.source_temp + kB * a * xs
    right = cfg.source_temp + a * (cfg.interface * (kB - kA) + kA * xs)
    u = np.where(xs <= cfg.interface, left, right)
    return float(u) if u.ndim == 0 else u


def heat_flux(config: RodConfig, kappa_A: float) -> float:
    """Heat flux -kappa_B u'(L) leaving the accessible end.

    Strictly increasing in ``kappa_A`` when source_temp > ambient_temp and
    bounded by :func:`flux_asymptote`.
    """
    _check_kappa(kappa_A)
    kB = config.kappa_B
    h = config.convection
    return kB * kappa_A * h * config.temp_drop / composite_conductance(config, kappa_A)


def flux_asymptote(config: RodConfig) -> float:
    """Supremum of the achievable flux, reached as ``kappa_A`` goes to infinity."""
    kB = config.kappa_B
    h = config.convection
    return h * kB * config.temp_drop / (h * config.tail_length + kB)


def interface_angle(config: RodConfig, kappa_A: float) -> float:
    """Angle in radians between the two linear branches at the interface.

    Computed as the difference of the branch inclinations, which stays
    accurate when the two conductivities are close.  Zero iff kA == kB.
    """
    p = solve_forward(config, kappa_A)
    return abs(math.atan(p.slope_left) - math.atan(p.slope_right))


def interface_angle_arccos(config: RodConfig, kappa_A: float) -> float:
    """Same angle via the arccos of the branch direction cosines.

    With ``a = h (Ta - F) / zeta`` the tangent of the angle is
    ``a (kB - kA) / (1 + a^2 kA kB)``, so
    ``cos(alpha) = (1 + a^2 (kB - kA)^2 / (1 + a^2 kA kB)^2) ** -0.5``.
    Loses precision for small angles; kept as a cross-check.
    """
    _check_kappa(kappa_A)
    kB = config.kappa_B
    a = config.convection * (config.ambient_temp - config.source_temp) / composite_conductance(config, kappa_A)
    ratio = a * a * (kB - kappa_A) ** 2 / (1.0 + a * a * kappa_A * kB) ** 2
    return math.acos(min(1.0, (1.0 + ratio) ** -0.5))
