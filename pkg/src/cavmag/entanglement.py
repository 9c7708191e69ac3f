"""Steady-state covariance matrix and Gaussian entanglement measures.

Covariance matrices follow the vacuum = 1/2 convention,
V_ij = <f_i f_j + f_j f_i>/2 for the quadrature vector of model.py.
Partial transposition of a mode flips the sign of its Y rows/columns;
a two-mode state is entangled iff the smallest symplectic eigenvalue of
the partially transposed matrix drops below 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from numpy.typing import NDArray

from . import linalg
from .model import MAGNON_TRIPLE, MODE_ORDER, LinearModel, ModeIndex
from .steady import DEFAULT_STABILITY_MARGIN, stability_report
from .linalg import UnstableSystemError

SYMMETRY_TOL = 1e-10
PHYSICALITY_TOL = 1e-9
PAIRING_RTOL = 1e-7


def symplectic_form(n_modes: int) -> NDArray[np.float64]:
    """Block-diagonal symplectic form: [[0, 1], [-1, 0]] per mode."""
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k, 2 * k + 1] = 1.0
        out[2 * k + 1, 2 * k] = -1.0
    return out


@dataclass(frozen=True)
class CovarianceMatrix:
    """A symmetric quadrature covariance matrix with labelled modes."""

    matrix: NDArray[np.float64]
    modes: tuple[ModeIndex, ...]

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=float)
        n = 2 * len(self.modes)
        if M.shape != (n, n):
            raise ValueError(
                f"matrix shape {M.shape} does not match {len(self.modes)} modes")
        if not np.all(np.isfinite(M)):
            raise ValueError("covariance matrix contains non-finite entries")
        scale = max(1.0, float(np.linalg.norm(M, ord=np.inf)))
        if np.linalg.norm(M - M.T, ord=np.inf) > SYMMETRY_TOL * scale:
            raise ValueError("covariance matrix is not symmetric")
        if len(set(self.modes)) != len(self.modes):
            raise ValueError("duplicate mode labels")
        object.__setattr__(self, "matrix", 0.5 * (M + M.T))
        object.__setattr__(self, "modes", tuple(self.modes))

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    def _positions(self, modes: Iterable[ModeIndex]) -> list[int]:
        pos = []
        for m in modes:
            if m not in self.modes:
                raise KeyError(f"mode {m.label} not present in this matrix")
            pos.append(self.modes.index(m))
        return pos

    def extract(self, modes: Sequence[ModeIndex]) -> "CovarianceMatrix":
        """Reduced state of the selected modes, rows/columns in requested order."""
        pos = self._positions(modes)
        idx = np.concatenate([[2 * p, 2 * p + 1] for p in pos]).astype(int)
        return CovarianceMatrix(self.matrix[np.ix_(idx, idx)], tuple(modes))

    def partial_transpose(self, transposed: Sequence[ModeIndex]) -> "CovarianceMatrix":
        """Flip the Y-quadrature sign of each mode in ``transposed``."""
        pos = self._positions(transposed)
        signs = np.ones(2 * self.n_modes)
        for p in pos:
            signs[2 * p + 1] = -1.0
        P = np.diag(signs)
        return CovarianceMatrix(P @ self.matrix @ P, self.modes)

    def is_physical(self, tol: float = PHYSICALITY_TOL) -> bool:
        """Uncertainty-principle check: min eig(V + i Omega/2) >= -tol."""
        H = self.matrix + 0.5j * symplectic_form(self.n_modes)
        return float(np.min(np.linalg.eigvalsh(H))) >= -tol


def symplectic_eigenvalues(cm: CovarianceMatrix,
                           pairing_rtol: float = PAIRING_RTOL) -> NDArray[np.float64]:
    """The n symplectic invariants of a covariance matrix, ascending.

    The spectrum of i*Omega*V consists of +/- pairs whose common modulus is
    the symplectic eigenvalue; residual pair mismatch beyond ``pairing_rtol``
    signals a corrupted (non-symmetric or non-finite) input.
    """
    V = cm.matrix
    lam = linalg.eigvals(symplectic_form(cm.n_modes) @ V)
    mags = np.sort(np.abs(lam))
    lo, hi = mags[0::2], mags[1::2]
    atol = 1e-12 * max(1.0, float(np.linalg.norm(V, ord=np.inf)))
    if np.any(np.abs(hi - lo) > pairing_rtol * np.maximum(hi, 1.0) + atol):
        raise linalg.LinalgError(
            "symplectic spectrum does not pair up; covariance matrix is corrupted")
    return 0.5 * (lo + hi)


def log_negativity(cm: CovarianceMatrix) -> float:
    """Bipartite entanglement of a two-mode state: max(0, -ln 2 nu_min~).

    nu_min~ is the smallest symplectic eigenvalue after partial
    transposition of the first mode (the choice of mode does not matter).
    """
    if cm.n_modes != 2:
        raise ValueError(f"log_negativity needs a two-mode state, got {cm.n_modes}")
    nu_min = symplectic_eigenvalues(cm.partial_transpose([cm.modes[0]]))[0]
    return max(0.0, -np.log(2.0 * nu_min))


def log_negativity_pair(cm: CovarianceMatrix, a: ModeIndex, b: ModeIndex) -> float:
    """Log-negativity between two modes of a larger state."""
    return log_negativity(cm.extract([a, b]))


def one_vs_two_log_negativity(cm: CovarianceMatrix, pivot: ModeIndex) -> float:
    """One-versus-rest log-negativity in a three-mode state.

    Partially transposes the pivot mode and applies the same
    max(0, -ln 2 nu_min~) formula on the 6x6 matrix.
    """
    if cm.n_modes != 3:
        raise ValueError(f"need a three-mode state, got {cm.n_modes}")
    if pivot not in cm.modes:
        raise KeyError(f"pivot {pivot.label} not among {[m.label for m in cm.modes]}")
    nu_min = symplectic_eigenvalues(cm.partial_transpose([pivot]))[0]
    return max(0.0, -np.log(2.0 * nu_min))


def residual_contangle(cm: CovarianceMatrix) -> tuple[float, dict[ModeIndex, float]]:
    """Minimum residual contangle of a three-mode state.

    For each pivot b with partners d, f the residual is
    E(b|df)^2 - E(b|d)^2 - E(b|f)^2 (squared log-negativities); the
    monogamy inequality makes every residual nonnegative, and the measure
    is the minimum over the three pivots. Returns (minimum, per-pivot map).
    """
    if cm.n_modes != 3:
        raise ValueError(f"need a three-mode state, got {cm.n_modes}")
    pair_sq: dict[frozenset[ModeIndex], float] = {}
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = cm.modes[i], cm.modes[j]
            pair_sq[frozenset((a, b))] = log_negativity_pair(cm, a, b) ** 2
    residuals: dict[ModeIndex, float] = {}
    for pivot in cm.modes:
        others = [m for m in cm.modes if m != pivot]
        r = one_vs_two_log_negativity(cm, pivot) ** 2
        for other in others:
            r -= pair_sq[frozenset((pivot, other))]
        residuals[pivot] = r
    return min(residuals.values()), residuals


def steady_covariance(model: LinearModel,
                      margin: float = DEFAULT_STABILITY_MARGIN) -> CovarianceMatrix:
    """Stationary covariance matrix of the fluctuations, via the Lyapunov equation."""
    report = stability_report(model.A, margin)
    if not report.stable:
        raise UnstableSystemError(
            f"no stationary covariance: spectral abscissa "
            f"{report.spectral_abscissa:.3e} >= -{margin:.1e}")
    V = linalg.solve_lyapunov(model.A, model.D)
    return CovarianceMatrix(V, MODE_ORDER)


def magnon_triple_contangle(cm: CovarianceMatrix,
                            triple: tuple[ModeIndex, ...] = MAGNON_TRIPLE,
                            ) -> tuple[float, dict[ModeIndex, float]]:
    """Residual contangle of a three-mode subset (default: the magnon triple)."""
    if len(triple) != 3:
        raise ValueError("triple must contain exactly 3 modes")
    return residual_contangle(cm.extract(triple))
