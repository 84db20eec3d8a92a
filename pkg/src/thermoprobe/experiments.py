"""Noisy-measurement estimation experiments and dataset generators.

The three built-in examples use a 10 m bar with the interface at 4 m,
F = 100 C, Ta = 25 C and h = 10, with the material pairs Fe-Ag, Al-Pb and
Ag-Cu.  Their measurement plans are the integer fluxes bracketing the exact
flux, which reproduces the published estimation tables.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .elasticity import elasticity
from .errors import DomainError
from .inverse import (DEFAULT_BOUNDS, ConductivityBounds, admissible_interval,
                      check_admissible, estimate_conductivity)
from .materials import lookup
from .model import RodConfig, evaluate_temperature, heat_flux, solve_forward

NOISE_MODES = ("uniform", "fixed-offsets")
RNG_NAME = "numpy.random.default_rng (PCG64)"
MAX_REDRAWS = 10_000


@dataclass(frozen=True)
class NoisePlan:
    """Synthetic measurements around the exact flux.

    ``uniform`` draws q + U(-epsilon, epsilon) from a seeded generator and
    redraws anything outside the admissible interval.  ``fixed-offsets``
    uses ``count`` evenly spaced offsets spanning [-epsilon, epsilon].
    """

    mode: str = "uniform"
    epsilon: float = 1.0
    count: int = 10
    rng_seed: int = 0

    def __post_init__(self):
        if self.mode not in NOISE_MODES:
            raise DomainError(f"noise mode must be one of {NOISE_MODES}, got {self.mode!r}")
        if not self.epsilon >= 0.0:
            raise DomainError(f"epsilon must be non-negative, got {self.epsilon!r}")
        if self.count < 1:
            raise DomainError(f"count must be at least 1, got {self.count}")


@dataclass(frozen=True)
class ExperimentSpec:
    config: RodConfig
    true_kappa_A: float
    measurements: Union[tuple, NoisePlan]
    bounds: ConductivityBounds = DEFAULT_BOUNDS
    label: str = ""

    def __post_init__(self):
        if not self.true_kappa_A > 0.0:
            raise DomainError(f"true_kappa_A must be positive, got {self.true_kappa_A!r}")
        if not isinstance(self.measurements, NoisePlan):
            values = tuple(float(q) for q in self.measurements)
            if not values:
                raise DomainError("explicit measurement list is empty")
            s = math.copysign(1.0, self.config.temp_drop)
            if any(not s * q > 0.0 for q in values):
                raise DomainError("explicit measurements must all have the sign of the flux")
            object.__setattr__(self, "measurements", values)

    @property
    def true_flux(self) -> float:
        return heat_flux(self.config, self.true_kappa_A)


@dataclass(frozen=True)
class ExperimentRow:
    q_hat: float
    kappa_hat: float  # NaN when inadmissible
    data_error: float
    abs_error: float
    rel_error: float
    admissible: bool = True


def _measurement_plan(spec: ExperimentSpec, q: float, interval) -> list[float]:
    plan = spec.measurements
    if not isinstance(plan, NoisePlan):
        return list(plan)
    if plan.mode == "fixed-offsets":
        if plan.count == 1:
            return [q]
        return list(q + np.linspace(-plan.epsilon, plan.epsilon, plan.count))

    rng = np.random.default_rng(plan.rng_seed)
    out = []
    for _ in range(plan.count):
        for _attempt in range(MAX_REDRAWS):
            q_hat = q + rng.uniform(-plan.epsilon, plan.epsilon)
            if check_admissible(q_hat, interval):
                break
        else:
            raise DomainError(
                f"could not draw an admissible measurement within epsilon={plan.epsilon} "
                f"of q={q} after {MAX_REDRAWS} attempts")
        out.append(float(q_hat))
    return out


def run_experiment(spec: ExperimentSpec) -> list[ExperimentRow]:
    """One row per planned measurement, in plan order.

    Explicit measurements outside the admissible interval are kept and
    flagged, with NaN estimate and errors.
    """
    q = spec.true_flux
    interval = admissible_interval(spec.config, spec.bounds)
    rows = []
    for q_hat in _measurement_plan(spec, q, interval):
        data_error = abs(q - q_hat)
        if check_admissible(q_hat, interval):
            k_hat = estimate_conductivity(spec.config, q_hat)
            abs_err = abs(spec.true_kappa_A - k_hat)
            rows.append(ExperimentRow(q_hat, k_hat, data_error, abs_err,
                                      abs_err / spec.true_kappa_A, True))
        else:
            rows.append(ExperimentRow(q_hat, math.nan, data_error, math.nan, math.nan, False))
    return rows


@dataclass(frozen=True)
class ExperimentSummary:
    n_rows: int
    n_admissible: int
    max_rel_error: float
    mean_rel_error: float
    max_abs_error: float
    true_flux: float
    elasticity_at_true_flux: float
    # rel_error(kappa_hat) / rel_error(q_hat) per admissible row; NaN for noiseless rows
    amplification: tuple = field(default=())
    mean_amplification: float = math.nan

    def to_dict(self) -> dict:
        return asdict(self)


def amplification_ratios(rows: Sequence[ExperimentRow], true_flux: float) -> np.ndarray:
    ratios = []
    for r in rows:
        if not r.admissible:
            continue
        rel_data = r.data_error / abs(true_flux)
        ratios.append(r.rel_error / rel_data if rel_data > 0.0 else math.nan)
    return np.array(ratios)


def summarize(rows: Sequence[ExperimentRow], spec: ExperimentSpec) -> ExperimentSummary:
    """Error statistics and the empirical amplification of relative errors.

    Raises DomainError when no row is admissible.
    """
    good = [r for r in rows if r.admissible]
    if not good:
        raise DomainError("no admissible rows to summarize")
    q = spec.true_flux
    rel = np.array([r.rel_error for r in good])
    ratios = amplification_ratios(good, q)
    finite = ratios[np.isfinite(ratios)]
    return ExperimentSummary(
        n_rows=len(rows),
        n_admissible=len(good),
        max_rel_error=float(rel.max()),
        mean_rel_error=float(rel.mean()),
        max_abs_error=float(max(r.abs_error for r in good)),
        true_flux=q,
        elasticity_at_true_flux=elasticity(spec.config, q),
        amplification=tuple(float(v) for v in ratios),
        mean_amplification=float(finite.mean()) if finite.size else math.nan,
    )


@dataclass(frozen=True)
class ProfileData:
    x: np.ndarray
    u: np.ndarray

    def rows(self):
        return list(zip(self.x.tolist(), self.u.tolist()))


def emit_profile(config: RodConfig, kappa_A: float, n_points: int) -> ProfileData:
    """Temperature on ``n_points`` uniform positions plus the interface itself."""
    if n_points < 2:
        raise DomainError(f"n_points must be at least 2, got {n_points}")
    x = np.union1d(np.linspace(0.0, config.length, n_points), [config.interface])
    u = evaluate_temperature(solve_forward(config, kappa_A), x)
    return ProfileData(x=x, u=np.asarray(u))


# -- built-in examples -------------------------------------------------------

def paper_config(kappa_B: float) -> RodConfig:
    return RodConfig(length=10.0, interface=4.0, source_temp=100.0,
                     ambient_temp=25.0, convection=10.0, kappa_B=kappa_B)


_EXAMPLES = {
    1: ("Fe", "Ag", range(439, 449)),
    2: ("Al", "Pb", range(252, 262)),
    3: ("Ag", "Cu", range(595, 605)),
}


def example_spec(example: int, bounds: Optional[ConductivityBounds] = None) -> ExperimentSpec:
    """Experiment 1 (Fe-Ag), 2 (Al-Pb) or 3 (Ag-Cu)."""
    try:
        sym_A, sym_B, fluxes = _EXAMPLES[example]
    except KeyError:
        raise DomainError(f"unknown example {example!r}; choose from {sorted(_EXAMPLES)}") from None
    return ExperimentSpec(
        config=paper_config(lookup(sym_B).kappa),
        true_kappa_A=lookup(sym_A).kappa,
        measurements=tuple(float(q) for q in fluxes),
        bounds=bounds or DEFAULT_BOUNDS,
        label=f"{sym_A}-{sym_B}",
    )


EXAMPLE_IDS = tuple(sorted(_EXAMPLES))
