"""Physical parameters and the linear model of the cavity-magnon chain.

The network is three microwave cavities in a line (couplings J12, J23),
each hosting one magnon mode via a beam-splitter coupling g_j, with an
optional degenerate parametric drive of strength G_j in each cavity and
coherent drives Omega_j on the cavity inputs.

Unit convention
---------------
Every rate, detuning and frequency is stored as an angular frequency in
rad/us, i.e. 2*pi times the value quoted in MHz; time is measured in us.
This keeps matrix entries O(10-100). Bare mode frequencies omega_a/omega_m
(needed only for thermal occupations) use the same unit, so 10 GHz is
2*pi*1e4 rad/us. Temperatures are kelvin.

Quadrature convention
---------------------
X = (a + a^dag)/sqrt(2), Y = i(a^dag - a)/sqrt(2), vacuum variance 1/2.
The 12-entry quadrature vector is ordered (X, Y) per mode over
[a1, a2, a3, m1, m2, m3]; all matrices in this package share that layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray

# CODATA 2018 exact values.
HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23      # J / K

TWO_PI = 2.0 * math.pi

Triple = tuple[float, float, float]


@dataclass(frozen=True, order=True)
class ModeIndex:
    """One bosonic mode of the network: a cavity or a magnon, numbered 1..3."""

    kind: Literal["cavity", "magnon"]
    index: int

    def __post_init__(self):
        if self.kind not in ("cavity", "magnon"):
            raise ValueError(f"unknown mode kind {self.kind!r}")
        if self.index not in (1, 2, 3):
            raise ValueError(f"mode index must be 1..3, got {self.index}")

    @property
    def position(self) -> int:
        """Slot in the fixed ordering [a1, a2, a3, m1, m2, m3]."""
        return (self.index - 1) if self.kind == "cavity" else (3 + self.index - 1)

    @property
    def label(self) -> str:
        return ("a" if self.kind == "cavity" else "m") + str(self.index)


def cavity(j: int) -> ModeIndex:
    return ModeIndex("cavity", j)


def magnon(j: int) -> ModeIndex:
    return ModeIndex("magnon", j)


MODE_ORDER: tuple[ModeIndex, ...] = (
    cavity(1), cavity(2), cavity(3), magnon(1), magnon(2), magnon(3))

MAGNON_TRIPLE: tuple[ModeIndex, ...] = (magnon(1), magnon(2), magnon(3))


def _check_triple(name: str, values, *, positive=False, nonnegative=False) -> Triple:
    t = tuple(float(v) for v in values)
    if len(t) != 3:
        raise ValueError(f"{name} must have exactly 3 entries, got {len(t)}")
    if any(not math.isfinite(v) for v in t):
        raise ValueError(f"{name} contains non-finite entries")
    if positive and any(v <= 0 for v in t):
        raise ValueError(f"{name} entries must be > 0, got {t}")
    if nonnegative and any(v < 0 for v in t):
        raise ValueError(f"{name} entries must be >= 0, got {t}")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class SystemParams:
    """All physical inputs of the model, in rad/us (temperature in K).

    G holds the parametric-drive strength per cavity, 0 where no such
    drive is installed; Omega the coherent drive amplitudes (Omega[0] is 0
    in every configuration studied here, but nothing below assumes it).
    """

    omega_a: Triple   # cavity mode frequencies (absolute)
    omega_m: Triple   # magnon mode frequencies (absolute)
    delta_a: Triple   # cavity detunings from the drive frame
    delta_m: Triple   # magnon detunings from the drive frame
    g: Triple         # cavity-magnon beam-splitter couplings
    kappa: Triple     # cavity decay rates
    gamma: Triple     # magnon decay rates
    J12: float        # cavity 1 - cavity 2 coupling
    J23: float        # cavity 2 - cavity 3 coupling
    G: Triple = (0.0, 0.0, 0.0)       # parametric gain per cavity
    Omega: Triple = (0.0, 0.0, 0.0)   # coherent drive Rabi rates
    T: float = 0.0    # bath temperature, kelvin

    def __post_init__(self):
        object.__setattr__(self, "omega_a", _check_triple("omega_a", self.omega_a, positive=True))
        object.__setattr__(self, "omega_m", _check_triple("omega_m", self.omega_m, positive=True))
        object.__setattr__(self, "delta_a", _check_triple("delta_a", self.delta_a))
        object.__setattr__(self, "delta_m", _check_triple("delta_m", self.delta_m))
        object.__setattr__(self, "g", _check_triple("g", self.g, nonnegative=True))
        object.__setattr__(self, "kappa", _check_triple("kappa", self.kappa, positive=True))
        object.__setattr__(self, "gamma", _check_triple("gamma", self.gamma, positive=True))
        object.__setattr__(self, "G", _check_triple("G", self.G, nonnegative=True))
        object.__setattr__(self, "Omega", _check_triple("Omega", self.Omega, nonnegative=True))
        for name in ("J12", "J23"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
            object.__setattr__(self, name, v)
        T = float(self.T)
        if not math.isfinite(T) or T < 0:
            raise ValueError(f"T must be finite and >= 0 K, got {T}")
        object.__setattr__(self, "T", T)


@dataclass(frozen=True)
class LinearModel:
    """Drift matrix A, diffusion matrix D and mean-field drive vector b.

    Governs both the quadrature means, du/dt = A u + b, and the
    fluctuation covariance through A V + V A^T = -D.
    """

    A: NDArray[np.float64]
    D: NDArray[np.float64]
    b: NDArray[np.float64]


def thermal_occupation(omega: float, T: float) -> float:
    """Bose-Einstein occupation of a bath mode at angular frequency omega (rad/us).

    Returns exactly 0 at T = 0 (and underflows to 0 for hbar*omega >> kT).
    """
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega}")
    if T < 0:
        raise ValueError(f"T must be >= 0, got {T}")
    if T == 0.0:
        return 0.0
    x = HBAR * (omega * 1e6) / (K_B * T)  # rad/us -> rad/s
    if x > 700.0:  # exp overflow; occupation is < 1e-300
        return 0.0
    return 1.0 / math.expm1(x)


def build_drift_matrix(p: SystemParams) -> NDArray[np.float64]:
    """Quadrature-space drift matrix of the linearized dynamics, 12x12.

    Per-mode 2x2 diagonal blocks: cavities [[2G_j - kappa_j, delta_a_j],
    [-delta_a_j, -2G_j - kappa_j]], magnons the same with G = 0 and
    (gamma_j, delta_m_j). Every excitation-exchange coupling c between
    modes (i, j) contributes +c at (X_i, Y_j) and -c at (Y_i, X_j),
    symmetrically in i <-> j.
    """
    A = np.zeros((12, 12))
    for j in range(3):
        X, Y = 2 * j, 2 * j + 1
        A[X, X] = 2.0 * p.G[j] - p.kappa[j]
        A[X, Y] = p.delta_a[j]
        A[Y, X] = -p.delta_a[j]
        A[Y, Y] = -2.0 * p.G[j] - p.kappa[j]
    for j in range(3):
        X, Y = 6 + 2 * j, 6 + 2 * j + 1
        A[X, X] = -p.gamma[j]
        A[X, Y] = p.delta_m[j]
        A[Y, X] = -p.delta_m[j]
        A[Y, Y] = -p.gamma[j]

    def couple(i: int, j: int, c: float) -> None:
        # i, j are slots in MODE_ORDER
        A[2 * i, 2 * j + 1] += c
        A[2 * i + 1, 2 * j] += -c
        A[2 * j, 2 * i + 1] += c
        A[2 * j + 1, 2 * i] += -c

    for j in range(3):
        couple(j, 3 + j, p.g[j])   # cavity j <-> magnon j
    couple(0, 1, p.J12)
    couple(1, 2, p.J23)
    return A


def build_diffusion(p: SystemParams) -> NDArray[np.float64]:
    """Diagonal noise matrix diag(kappa_j(2N_aj+1) x2, ..., gamma_j(2N_mj+1) x2)."""
    entries = []
    for j in range(3):
        n = thermal_occupation(p.omega_a[j], p.T)
        entries += [p.kappa[j] * (2.0 * n + 1.0)] * 2
    for j in range(3):
        n = thermal_occupation(p.omega_m[j], p.T)
        entries += [p.gamma[j] * (2.0 * n + 1.0)] * 2
    return np.diag(entries)


def build_drive_vector(p: SystemParams) -> NDArray[np.float64]:
    """Mean-field drive vector: sqrt(2)*Omega_j on the X row of cavity j.

    A real drive amplitude pushes only the X quadrature under the
    X = (a + a^dag)/sqrt(2) convention.
    """
    b = np.zeros(12)
    for j in range(3):
        b[2 * j] = math.sqrt(2.0) * p.Omega[j]
    return b


def build_linear_model(p: SystemParams) -> LinearModel:
    return LinearModel(A=build_drift_matrix(p), D=build_diffusion(p),
                       b=build_drive_vector(p))


def rabi_from_power(power: float, kappa: float, omega: float) -> float:
    """Drive Rabi rate sqrt(2 P kappa / (hbar omega)), in rad/us.

    ``power`` is in watts; kappa and omega in rad/us. Zero power is allowed
    and gives zero.
    """
    if power < 0:
        raise ValueError(f"power must be >= 0, got {power}")
    if kappa <= 0 or omega <= 0:
        raise ValueError("kappa and omega must be > 0")
    # SI: Omega = sqrt(2 P kappa_SI / (hbar omega_SI)) rad/s; the 1e6 unit
    # factors of kappa and omega cancel, leaving a 1e-6 for rad/s -> rad/us.
    return math.sqrt(2.0 * power * kappa / (HBAR * omega)) * 1e-6


def power_from_rabi(rabi: float, kappa: float, omega: float) -> float:
    """Inverse of rabi_from_power: drive power in watts giving the requested rate."""
    if rabi < 0:
        raise ValueError(f"rabi must be >= 0, got {rabi}")
    if kappa <= 0 or omega <= 0:
        raise ValueError("kappa and omega must be > 0")
    return (rabi * 1e6) ** 2 * HBAR * omega / (2.0 * kappa)


def apply_detuning_constraints(delta_a1: float, delta_m1: float) -> tuple[Triple, Triple]:
    """Linked-detuning rule: delta_a = (d, d, -d), delta_m likewise."""
    return ((delta_a1, delta_a1, -delta_a1), (delta_m1, delta_m1, -delta_m1))
