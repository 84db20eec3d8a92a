"""Estimate the conductivity of the hidden section of a two-material bar.

A bar of length L consists of an unknown material A on ``[0, l]`` and a
known material B on ``[l, L]``.  Given the heat flux measured at the
convective end ``x = L``, :func:`estimate_conductivity` recovers ``kappa_A``
in closed form.  The package also provides the admissible measurement
interval, analytic error bounds, the elasticity of the estimate and an
independent finite-volume solver for cross-checking the forward model.
"""

__version__ = "0.1.0"

from .errors import (AsymptoteExceededError, DomainError,
                     InadmissibleMeasurementError, MaterialFileError,
                     MaterialNotFoundError)
from .model import (RodConfig, TemperatureProfile, composite_conductance,
                    evaluate_temperature, flux_asymptote, heat_flux,
                    interface_angle, solve_forward)
from .inverse import (DEFAULT_BOUNDS, AdmissibleFluxInterval, ConductivityBounds,
                      EstimationReport, admissible_interval, build_report,
                      check_admissible, error_bound_K1, error_bound_K2,
                      estimate_conductivity)
from .elasticity import (ElasticityCurve, elasticity, elasticity_derivative,
                         sample_curve, vertical_asymptote)
from .fd_oracle import DiscreteSolution, fd_solve
from .materials import Material, builtin_database, load_materials, lookup
from .experiments import (ExperimentRow, ExperimentSpec, NoisePlan, emit_profile,
                          example_spec, run_experiment, summarize)
