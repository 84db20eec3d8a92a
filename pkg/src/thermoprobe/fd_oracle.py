"""Finite-volume solver for the two-material bar.

Used as an independent check on the closed-form solution: it only reads the
problem data from :class:`~thermoprobe.model.RodConfig` and shares no
formulas with :mod:`thermoprobe.model`.

The grid is uniform on each material section with a node placed exactly on
the interface.  Face conductivities are length-weighted harmonic means over
the face segment, which keeps the discrete flux continuous across the
interface.  Because the exact solution is linear on each section, the
scheme reproduces it up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import RodConfig


def solve_tridiagonal(lower, diag, upper, rhs):
    """Thomas algorithm for a tridiagonal system.

    ``lower[i]`` multiplies x[i-1] in row i (lower[0] is ignored) and
    ``upper[i]`` multiplies x[i+1] (upper[-1] is ignored).  No pivoting;
    the matrix must be diagonally dominant or otherwise safe to eliminate.
    """
    n = len(diag)
    c = np.empty(n)
    d = np.empty(n)
    piv = diag[0]
    if piv == 0.0:
        raise ArithmeticError("zero pivot in tridiagonal elimination at row 0")
    c[0] = upper[0] / piv
    d[0] = rhs[0] / piv
    for i in range(1, n):
        piv = diag[i] - lower[i] * c[i - 1]
        if piv == 0.0:
            raise ArithmeticError(f"zero pivot in tridiagonal elimination at row {i}")
        c[i] = upper[i] / piv if i < n - 1 else 0.0
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv
    x = np.empty(n)
    x[-1] = d[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]
    return x


@dataclass(frozen=True)
class DiscreteSolution:
    node_positions: np.ndarray
    node_temperatures: np.ndarray
    numeric_flux_at_L: float
    node_count: int
    interface_index: int
    face_fluxes: np.ndarray  # -k (u[i+1] - u[i]) / dx on every face


def interface_grid(config: RodConfig, n_cells: int):
    """Node positions with a node exactly at the interface.

    Returns ``(x, interface_index)``.  Each section gets at least two cells.
    """
    if n_cells < 4:
        raise DomainError(f"n_cells must be at least 4, got {n_cells}")
    n_left = int(round(n_cells * config.interface / config.length))
    n_left = min(max(n_left, 2), n_cells - 2)
    left = np.linspace(0.0, config.interface, n_left + 1)
    right = np.linspace(config.interface, config.length, n_cells - n_left + 1)
    x = np.concatenate([left, right[1:]])
    x[n_left] = config.interface
    return x, n_left


def _face_conductivity(x, l, kappa_A, kappa_B):
    a, b = x[:-1], x[1:]
    len_A = np.clip(np.minimum(b, l) - a, 0.0, None)
    len_B = np.clip(b - np.maximum(a, l), 0.0, None)
    return (b - a) / (len_A / kappa_A + len_B / kappa_B)


def fd_solve(config: RodConfig, kappa_A: float, n_cells: int) -> DiscreteSolution:
    """Solve the discrete steady problem on ``n_cells`` cells."""
    if not kappa_A > 0.0:
        raise DomainError(f"kappa_A must be positive, got {kappa_A!r}")
    x, k_if = interface_grid(config, n_cells)
    dx = np.diff(x)
    g = _face_conductivity(x, config.interface, kappa_A, config.kappa_B) / dx

    # unknowns u[1..N]; u[0] = source_temp is eliminated
    n = len(x) - 1
    lower = np.zeros(n)
    diag = np.zeros(n)
    upper = np.zeros(n)
    rhs = np.zeros(n)
    for row in range(n):
        i = row + 1
        west = g[i - 1]
        if i < n:
            east = g[i]
            diag[row] = west + east
            upper[row] = -east
        else:
            # ghost node eliminated: convective balance of the end half-cell
            diag[row] = west + config.convection
            rhs[row] += config.convection * config.ambient_temp
        if i == 1:
            rhs[row] += west * config.source_temp
        else:
            lower[row] = -west

    u = np.empty(n + 1)
    u[0] = config.source_temp
    u[1:] = solve_tridiagonal(lower, diag, upper, rhs)
    if not np.all(np.isfinite(u)):
        raise ArithmeticError("finite-difference solve produced non-finite values")

    face_k = g * dx
    face_fluxes = -face_k * np.diff(u) / dx
    h_end = x[-1] - x[-2]
    # second-order one-sided difference on the uniform material-B grid
    flux_L = -config.kappa_B * (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h_end)
    return DiscreteSolution(
        node_positions=x,
        node_temperatures=u,
        numeric_flux_at_L=float(flux_L),
        node_count=len(x),
        interface_index=k_if,
        face_fluxes=face_fluxes,
    )
