"""Dense linear algebra for small real matrices.

Everything here operates on plain float64 numpy arrays of modest size
(n <= 12 in practice, 144x144 for the vectorized Lyapunov system).
All routines validate their inputs and raise instead of returning
garbage; tolerances are keyword arguments with conservative defaults.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray


class LinalgError(RuntimeError):
    """An eigenvalue iteration failed, or a system is (near-)singular."""


class UnstableSystemError(RuntimeError):
    """An operation requiring a Hurwitz-stable drift matrix got an unstable one."""


def _as_square_matrix(M, name: str = "matrix") -> NDArray[np.float64]:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} contains non-finite entries")
    return M


def eigvals(M) -> NDArray[np.complex128]:
    """All eigenvalues of a square real matrix, with multiplicity, unsorted.

    For real input the nonreal eigenvalues come in conjugate pairs (LAPACK
    guarantees exact pairing). Convergence failures raise LinalgError.
    """
    M = _as_square_matrix(M)
    try:
        return np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise LinalgError(f"eigenvalue iteration failed: {exc}") from exc


def spectral_abscissa(M) -> float:
    """Largest real part over the spectrum of M."""
    return float(np.max(eigvals(M).real))


def solve_linear(M, rhs, *, cond_limit: float = 1e12,
                 residual_tol: float = 1e-10) -> NDArray[np.float64]:
    """Solve M x = rhs for square, well-conditioned M.

    Raises LinalgError if M is singular or its 2-norm condition number
    exceeds ``cond_limit``, and verifies the componentwise residual bound
    ||M x - rhs||_inf <= residual_tol * (||M||_inf ||x||_inf + ||rhs||_inf).
    """
    M = _as_square_matrix(M)
    rhs = np.asarray(rhs, dtype=float)
    if not np.all(np.isfinite(rhs)):
        raise ValueError("rhs contains non-finite entries")
    if rhs.shape[0] != M.shape[0]:
        raise ValueError(f"rhs length {rhs.shape[0]} != matrix dimension {M.shape[0]}")

    cond = np.linalg.cond(M)
    if not np.isfinite(cond) or cond > cond_limit:
        raise LinalgError(f"matrix is singular or near-singular (cond ~ {cond:.3e})")
    try:
        x = np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError as exc:
        raise LinalgError(f"linear solve failed: {exc}") from exc

    residual = np.linalg.norm(M @ x - rhs, ord=np.inf)
    scale = np.linalg.norm(M, ord=np.inf) * np.linalg.norm(x, ord=np.inf) \
        + np.linalg.norm(rhs, ord=np.inf)
    if residual > residual_tol * scale:
        raise LinalgError(
            f"solve residual {residual:.3e} exceeds {residual_tol:.1e} * {scale:.3e}")
    return x


def solve_lyapunov(A, D, *, residual_tol: float = 1e-10,
                   symmetry_tol: float = 1e-9) -> NDArray[np.float64]:
    """Solve the continuous Lyapunov equation A V + V A^T = -D.

    Uses the vectorized form (I (x) A + A (x) I) vec(V) = -vec(D), a dense
    n^2 x n^2 solve; exact and cheap at the n = 12 this package needs.
    A must be Hurwitz stable (all eigenvalues in the open left half-plane),
    which makes the Kronecker system nonsingular and the solution unique.
    The result is symmetrized before the residual check
    ||A V + V A^T + D||_inf <= residual_tol * max(||A||_inf ||V||_inf, ||D||_inf).
    """
    A = _as_square_matrix(A, "A")
    D = _as_square_matrix(D, "D")
    n = A.shape[0]
    if D.shape[0] != n:
        raise ValueError(f"A is {n}x{n} but D is {D.shape[0]}x{D.shape[0]}")
    d_scale = max(1.0, float(np.linalg.norm(D, ord=np.inf)))
    if np.linalg.norm(D - D.T, ord=np.inf) > symmetry_tol * d_scale:
        raise ValueError("D must be symmetric")
    if spectral_abscissa(A) >= 0.0:
        raise UnstableSystemError(
            "drift matrix is not Hurwitz stable; Lyapunov solution "
            "is not guaranteed unique/positive")

    eye = np.eye(n)
    K = np.kron(eye, A) + np.kron(A, eye)
    try:
        v = np.linalg.solve(K, -D.flatten(order="F"))
    except np.linalg.LinAlgError as exc:
        raise LinalgError(f"Kronecker system singular: {exc}") from exc
    V = v.reshape((n, n), order="F")
    V = 0.5 * (V + V.T)

    residual = np.linalg.norm(A @ V + V @ A.T + D, ord=np.inf)
    scale = max(np.linalg.norm(A, ord=np.inf) * np.linalg.norm(V, ord=np.inf),
                np.linalg.norm(D, ord=np.inf))
    if residual > residual_tol * scale:
        raise LinalgError(
            f"Lyapunov residual {residual:.3e} exceeds {residual_tol:.1e} * {scale:.3e}")
    return V
