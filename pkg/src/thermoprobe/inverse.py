"""Closed-form recovery of ``kappa_A`` from one flux measurement.

The flux map ``kappa_A -> q`` is a strictly monotone Moebius transform, so it
inverts algebraically.  Prior bounds ``kappa_min < kappa_A < kappa_max``
translate into an open interval of admissible measurements, and the same
bounds give constants K1, K2 that bound the estimation error by the noise
level.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from .elasticity import elasticity
from .errors import DomainError, InadmissibleMeasurementError
from .model import RodConfig, flux_asymptote, heat_flux

# Denominators smaller than this fraction of h*kB*(F-Ta) count as "at the asymptote".
ASYMPTOTE_GUARD = 1e-13


@dataclass(frozen=True)
class ConductivityBounds:
    kappa_min: float
    kappa_max: float

    def __post_init__(self):
        if not (0.0 < self.kappa_min < self.kappa_max and math.isfinite(self.kappa_max)):
            raise DomainError(
                "bounds must satisfy 0 < kappa_min < kappa_max < inf, got "
                f"kappa_min={self.kappa_min}, kappa_max={self.kappa_max}")


DEFAULT_BOUNDS = ConductivityBounds(1.0, 1000.0)


@dataclass(frozen=True)
class AdmissibleFluxInterval:
    """Open interval (q_min, q_max) of invertible measurements, and the asymptote.

    For source_temp < ambient_temp every flux is negative and the ordering
    holds for the magnitudes.
    """

    q_min: float
    q_max: float
    q_asymptote: float

    def __post_init__(self):
        s = math.copysign(1.0, self.q_asymptote)
        if not 0.0 < s * self.q_min < s * self.q_max < s * self.q_asymptote:
            raise DomainError(
                "expected 0 < q_min < q_max < q_asymptote (in magnitude), got "
                f"{self.q_min}, {self.q_max}, {self.q_asymptote}")

    def contains(self, q: float) -> bool:
        return check_admissible(q, self)


def _sign(config: RodConfig) -> float:
    return 1.0 if config.temp_drop > 0 else -1.0


def estimate_conductivity(config: RodConfig, measured_flux: float) -> float:
    """Conductivity of material A reproducing ``measured_flux`` exactly.

    Raises
    ------
    DomainError
        If the measurement has the wrong sign (or is zero).
    InadmissibleMeasurementError
        If the measurement is at or beyond the flux asymptote, where no
        finite positive conductivity exists.
    """
    s = _sign(config)
    if not (s * measured_flux > 0.0 and math.isfinite(measured_flux)):
        raise DomainError(
            f"measured flux must be nonzero with the sign of source_temp - ambient_temp, "
            f"got {measured_flux!r}")
    h = config.convection
    kB = config.kappa_B
    scale = h * kB * config.temp_drop
    denom = scale - measured_flux * h * config.tail_length - measured_flux * kB
    if s * denom <= ASYMPTOTE_GUARD * abs(scale):
        q_bar = flux_asymptote(config)
        raise InadmissibleMeasurementError(
            f"measured flux {measured_flux} is not below the asymptote {q_bar}",
            measured_flux, q_bar)
    return measured_flux * h * config.interface * kB / denom


def admissible_interval(config: RodConfig, bounds: ConductivityBounds) -> AdmissibleFluxInterval:
    """Measurements whose estimate falls strictly inside ``bounds``.

    The flux map is strictly monotone in ``kappa_A``, so the endpoints are
    simply the fluxes produced by the two bounding conductivities.
    """
    return AdmissibleFluxInterval(
        q_min=heat_flux(config, bounds.kappa_min),
        q_max=heat_flux(config, bounds.kappa_max),
        q_asymptote=flux_asymptote(config),
    )


def check_admissible(measured_flux: float, interval: AdmissibleFluxInterval) -> bool:
    s = math.copysign(1.0, interval.q_asymptote)
    return s * interval.q_min < s * measured_flux < s * interval.q_max


def reciprocal_error(config: RodConfig, q: float, q_hat: float) -> float:
    """|1/kA - 1/kA_hat| expressed through the two fluxes (an exact identity)."""
    return abs(config.temp_drop) * abs(q - q_hat) / (config.interface * abs(q * q_hat))


def error_bound_K1(config: RodConfig, bounds: ConductivityBounds) -> float:
    """Constant K1 with |1/kA - 1/kA_hat| < K1 * eps for admissible data."""
    h = config.convection
    l = config.interface
    km = bounds.kappa_min
    bracket = 1.0 + km / (h * l) * (1.0 + h * config.tail_length / config.kappa_B)
    return l / (km * km * abs(config.temp_drop)) * bracket * bracket


def error_bound_K2(config: RodConfig, bounds: ConductivityBounds) -> float:
    """Constant K2 = kappa_max^2 K1 with |kA - kA_hat| < K2 * eps."""
    return bounds.kappa_max ** 2 * error_bound_K1(config, bounds)


@dataclass(frozen=True)
class EstimationReport:
    """Everything known about one measurement.

    ``kappa_hat`` and ``elasticity_at_measurement`` are None when they do
    not exist; ``reason`` explains a rejected measurement.  The
    ``distance_to_*`` fields are signed so that positive means "on the
    admissible side" of that endpoint.
    """

    kappa_hat: Optional[float]
    measured_flux: float
    noise_level: float
    admissible: bool
    bound_K1: float
    bound_K2: float
    absolute_error_bound: float
    elasticity_at_measurement: Optional[float]
    kappa_min: float
    kappa_max: float
    q_min: float
    q_max: float
    q_asymptote: float
    distance_to_q_min: float
    distance_to_q_max: float
    distance_to_asymptote: float
    reason: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)


def build_report(config: RodConfig, measured_flux: float, noise_level: float,
                 bounds: ConductivityBounds = DEFAULT_BOUNDS) -> EstimationReport:
    """Estimate, admissibility verdict, error bounds and elasticity in one record.

    An inadmissible measurement does not raise; it yields a report with
    ``admissible=False`` and the reason.
    """
    if not noise_level >= 0.0:
        raise DomainError(f"noise_level must be non-negative, got {noise_level!r}")
    interval = admissible_interval(config, bounds)
    s = math.copysign(1.0, interval.q_asymptote)
    K1 = error_bound_K1(config, bounds)
    K2 = error_bound_K2(config, bounds)

    admissible = check_admissible(measured_flux, interval)
    kappa_hat = None
    reason = None
    if admissible:
        kappa_hat = estimate_conductivity(config, measured_flux)
    elif s * measured_flux <= 0.0:
        reason = "measured flux has the wrong sign or is zero"
    elif s * measured_flux >= s * interval.q_asymptote:
        reason = "measured flux is at or beyond the flux asymptote; no finite conductivity reproduces it"
    elif s * measured_flux <= s * interval.q_min:
        reason = "measured flux is at or below q_min; the estimate would not exceed kappa_min"
    else:
        reason = "measured flux is at or above q_max; the estimate would not stay below kappa_max"

    e = None
    if 0.0 < measured_flux / interval.q_asymptote < 1.0:
        e = elasticity(config, measured_flux)

    return EstimationReport(
        kappa_hat=kappa_hat,
        measured_flux=measured_flux,
        noise_level=noise_level,
        admissible=admissible,
        bound_K1=K1,
        bound_K2=K2,
        absolute_error_bound=K2 * noise_level,
        elasticity_at_measurement=e,
        kappa_min=bounds.kappa_min,
        kappa_max=bounds.kappa_max,
        q_min=interval.q_min,
        q_max=interval.q_max,
        q_asymptote=interval.q_asymptote,
        distance_to_q_min=s * (measured_flux - interval.q_min),
        distance_to_q_max=s * (interval.q_max - measured_flux),
        distance_to_asymptote=s * (interval.q_asymptote - measured_flux),
        reason=reason,
    )
