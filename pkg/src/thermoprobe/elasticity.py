"""Elasticity of the conductivity estimate with respect to the measured flux.

E(q) = (q / kappa_A) d kappa_A / d q is the percent change of the estimate
per percent change of the measurement.  It depends only on the known data,
never on ``kappa_A``, so it can be inspected before any measurement is
taken.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AsymptoteExceededError, DomainError
from .model import RodConfig, flux_asymptote


def vertical_asymptote(config: RodConfig) -> float:
    """Flux at which E(q) blows up; identical to the flux supremum."""
    return flux_asymptote(config)


def _check_flux(config, q):
    q_bar = flux_asymptote(config)
    ratio = np.asarray(q, dtype=float) / q_bar
    if np.any(~np.isfinite(ratio)) or np.any(ratio <= 0.0):
        raise DomainError(f"flux must be strictly between 0 and the asymptote {q_bar}, got {q!r}")
    if np.any(ratio >= 1.0):
        raise AsymptoteExceededError(
            f"flux {q!r} reaches the vertical asymptote {q_bar}", q_bar)
    return q_bar


def _scalar_or_array(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def elasticity(config: RodConfig, q):
    """E(q) from the raw problem data; accepts a scalar or an array of fluxes."""
    _check_flux(config, q)
    q = np.asarray(q, dtype=float)
    h = config.convection
    kB = config.kappa_B
    num = config.temp_drop * h * kB
    return _scalar_or_array(num / (num - q * (kB + h * config.tail_length)))


def elasticity_from_asymptote(config: RodConfig, q):
    """E(q) written as q_bar / (q_bar - q)."""
    q_bar = _check_flux(config, q)
    q = np.asarray(q, dtype=float)
    return _scalar_or_array(q_bar / (q_bar - q))


def elasticity_derivative(config: RodConfig, q):
    """dE/dq = q_bar / (q_bar - q)^2, positive on the whole domain."""
    q_bar = _check_flux(config, q)
    q = np.asarray(q, dtype=float)
    return _scalar_or_array(q_bar / (q_bar - q) ** 2)


@dataclass(frozen=True)
class ElasticityCurve:
    config: RodConfig
    asymptote: float
    flux: np.ndarray
    values: np.ndarray

    @property
    def samples(self):
        return list(zip(self.flux.tolist(), self.values.tolist()))

    def __len__(self):
        return len(self.flux)


def sample_curve(config: RodConfig, q_lo: float, q_hi: float, n: int) -> ElasticityCurve:
    """``n`` uniformly spaced samples of E on ``[q_lo, q_hi]``."""
    if n < 2:
        raise DomainError(f"need at least 2 samples, got n={n}")
    if not abs(q_lo) < abs(q_hi):
        raise DomainError(f"need |q_lo| < |q_hi|, got q_lo={q_lo}, q_hi={q_hi}")
    q_bar = _check_flux(config, [q_lo, q_hi])
    flux = np.linspace(q_lo, q_hi, n)
    return ElasticityCurve(config=config, asymptote=q_bar, flux=flux,
                           values=np.asarray(elasticity(config, flux)))
