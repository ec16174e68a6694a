"""Dense Hermitian linear algebra helpers for bipartite matrices.

Thin contract-checked wrappers around numpy.linalg plus the two
subsystem reshapes (partial transpose, partial trace) everything else
is built on. All functions accept array-likes and return ndarrays.
"""
from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NonHermitian, NonSquare

HERMITICITY_TOL = 1e-10


def _as_square(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {a.shape}")
    return a


def _require_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.conj().T)) > tol * scale:
        raise NonHermitian("matrix is not Hermitian within tolerance")
    return a


def _split_dims(a: np.ndarray, d_a: int, d_b: int) -> None:
    if d_a < 1 or d_b < 1 or a.shape[0] != d_a * d_b:
        raise DimensionMismatch(
            f"matrix of size {a.shape[0]} does not factor as {d_a}x{d_b}"
        )


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(np.asarray(a), np.asarray(b))


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    Raises NonSquare / NonHermitian when the input fails its checks.
    """
    a = _require_hermitian(_as_square(m))
    return np.linalg.eigvalsh(a)


def hermitian_eigensystem(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvector columns."""
    a = _require_hermitian(_as_square(m))
    return np.linalg.eigh(a)


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eigenvalues(m))))


def hs_norm(m) -> float:
    """Hilbert-Schmidt (Frobenius) norm, any rectangular matrix."""
    a = np.asarray(m)
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def partial_transpose(rho, d_a: int, d_b: int, side: str = "A") -> np.ndarray:
    """Transpose one subsystem of a bipartite matrix.

    Parameters
    ----------
    rho : (d_a*d_b, d_a*d_b) array
    side : "A" or "B", the subsystem being transposed.
    """
    a = _as_square(rho)
    _split_dims(a, d_a, d_b)
    t = np.asarray(a).reshape(d_a, d_b, d_a, d_b)
    if side == "A":
        t = t.transpose(2, 1, 0, 3)
    elif side == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return t.reshape(d_a * d_b, d_a * d_b)


def partial_trace(rho, d_a: int, d_b: int, keep: str = "A") -> np.ndarray:
    """Trace out one subsystem, keeping the other."""
    a = _as_square(rho)
    _split_dims(a, d_a, d_b)
    t = np.asarray(a).reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("ipjp->ij", t)
    if keep == "B":
        return np.einsum("pipj->ij", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
