"""Stability of the drift matrix and the semiclassical steady state."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from . import linalg
from .linalg import UnstableSystemError
from .model import LinearModel

DEFAULT_STABILITY_MARGIN = 1e-9  # rad/us; |abscissa| below this counts as unstable

SPIN_DENSITY_YIG = 4.22e27  # spins / m^3
SPIN_QUANTUM_YIG = 2.5      # ground-state Fe3+ spin


def spectral_abscissa(A) -> float:
    """Maximum real part over the eigenvalues of A; negative means stable."""
    return linalg.spectral_abscissa(A)


@dataclass(frozen=True)
class StabilityReport:
    spectral_abscissa: float
    stable: bool
    margin_tolerance: float


def stability_report(A, margin: float = DEFAULT_STABILITY_MARGIN) -> StabilityReport:
    """Classify A as stable iff its spectral abscissa is below -margin.

    Marginal systems (|abscissa| < margin) are conservatively unstable.
    """
    sa = spectral_abscissa(A)
    return StabilityReport(spectral_abscissa=sa, stable=sa < -margin,
                           margin_tolerance=margin)


@dataclass(frozen=True)
class MeanField:
    """Steady quadrature means and the occupations they imply.

    With <a> = (<X> + i<Y>)/sqrt(2), the mean occupation is
    |<a>|^2 = (<X>^2 + <Y>^2)/2.
    """

    u: NDArray[np.float64]
    n_a: tuple[float, float, float]
    n_m: tuple[float, float, float]


def steady_means(model: LinearModel,
                 margin: float = DEFAULT_STABILITY_MARGIN) -> MeanField:
    """Solve A u = -b for the stationary quadrature means.

    Raises UnstableSystemError when A is not stable within the margin
    (there is no steady state to report).
    """
    report = stability_report(model.A, margin)
    if not report.stable:
        raise UnstableSystemError(
            f"no steady state: spectral abscissa {report.spectral_abscissa:.3e} "
            f">= -{margin:.1e}")
    u = linalg.solve_linear(model.A, -model.b)
    occ = [float(u[2 * k] ** 2 + u[2 * k + 1] ** 2) / 2.0 for k in range(6)]
    return MeanField(u=u, n_a=tuple(occ[:3]), n_m=tuple(occ[3:]))


@dataclass(frozen=True)
class WeakExcitationCheck:
    spin_count: float
    ratio: float
    passed: bool


def weak_excitation_check(n_m: float, diameter: float,
                          spin_density: float = SPIN_DENSITY_YIG,
                          spin: float = SPIN_QUANTUM_YIG,
                          threshold: float = 1e-5) -> WeakExcitationCheck:
    """Check <m^dag m> << 2 N s for a sphere of the given diameter (meters).

    N is the total spin count spin_density * (pi/6) * diameter^3; the check
    passes when n_m / (2 N s) is below ``threshold``.
    """
    if diameter <= 0 or spin_density <= 0 or spin <= 0:
        raise ValueError("diameter, spin_density and spin must be > 0")
    if n_m < 0:
        raise ValueError(f"n_m must be >= 0, got {n_m}")
    spin_count = float(spin_density * (np.pi / 6.0) * diameter ** 3)
    ratio = float(n_m / (2.0 * spin_count * spin))
    return WeakExcitationCheck(spin_count=spin_count, ratio=ratio,
                               passed=bool(ratio < threshold))
