"""Shared test fixtures: parameter sets and random covariance matrices."""

import numpy as np

from cavmag.model import TWO_PI, SystemParams, apply_detuning_constraints

GHZ10 = TWO_PI * 1e4  # 10 GHz in rad/us


def paper_params(delta_a1_mhz=0.0, delta_m1_mhz=0.0, G=(4.5, 0.0, 0.0),
                 T=0.020):
    """The experimentally-motivated base parameter set, internal units."""
    da, dm = apply_detuning_constraints(TWO_PI * delta_a1_mhz,
                                        TWO_PI * delta_m1_mhz)
    return SystemParams(
        omega_a=(GHZ10,) * 3, omega_m=(GHZ10,) * 3,
        delta_a=da, delta_m=dm,
        g=(TWO_PI * 20,) * 3, kappa=(TWO_PI * 5,) * 3, gamma=(TWO_PI * 1,) * 3,
        J12=TWO_PI * 12, J23=TWO_PI * 12,
        G=tuple(TWO_PI * v for v in G),
        Omega=(0.0, TWO_PI * 1, TWO_PI * 1), T=T)


def rotation_2x2(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def random_symplectic(rng, n_modes):
    """Random symplectic built from elementary operations with closed forms:
    per-mode rotations and squeezers, and beam splitters between mode pairs.
    Each factor preserves the block-diagonal symplectic form exactly."""
    dim = 2 * n_modes
    S = np.eye(dim)
    for _ in range(3):
        # local layer: rotation, squeeze, rotation on every mode
        local = np.eye(dim)
        for k in range(n_modes):
            blk = (rotation_2x2(rng.uniform(0, 2 * np.pi))
                   @ np.diag([np.exp(r := rng.uniform(-0.8, 0.8)), np.exp(-r)])
                   @ rotation_2x2(rng.uniform(0, 2 * np.pi)))
            local[2 * k:2 * k + 2, 2 * k:2 * k + 2] = blk
        S = local @ S
        # entangling layer: beam splitters on consecutive mode pairs
        for i in range(n_modes - 1):
            bs = np.eye(dim)
            c, s = np.cos(th := rng.uniform(0, 2 * np.pi)), np.sin(th)
            sl_i = slice(2 * i, 2 * i + 2)
            sl_j = slice(2 * i + 2, 2 * i + 4)
            bs[sl_i, sl_i] = c * np.eye(2)
            bs[sl_j, sl_j] = c * np.eye(2)
            bs[sl_i, sl_j] = s * np.eye(2)
            bs[sl_j, sl_i] = -s * np.eye(2)
            S = bs @ S
    return S


def random_physical_cm(rng, n_modes, max_nu=3.0):
    """V = S diag(nu) S^T with nu >= 1/2: a valid covariance matrix whose
    symplectic spectrum is the chosen nu (sorted)."""
    nu = rng.uniform(0.5, max_nu, size=n_modes)
    diag = np.repeat(nu, 2)
    S = random_symplectic(rng, n_modes)
    V = S @ np.diag(diag) @ S.T
    return 0.5 * (V + V.T), np.sort(nu)


def random_stable_helper(rng, n):
    """Random Hurwitz matrix: shift a random matrix left of its abscissa."""
    M = rng.standard_normal((n, n))
    sa = float(np.max(np.linalg.eigvals(M).real))
    return M - (sa + rng.uniform(0.1, 2.0)) * np.eye(n)


def tmsv_matrix(r):
    """Two-mode squeezed vacuum covariance matrix (vacuum = 1/2)."""
    c, s = np.cosh(2 * r) / 2, np.sinh(2 * r) / 2
    return np.array([
        [c, 0, s, 0],
        [0, c, 0, -s],
        [s, 0, c, 0],
        [0, -s, 0, c],
    ])
