"""Dense complex linear algebra helpers sized for small Hilbert spaces (N <= 13).

Backed by numpy throughout; roots of unity are always evaluated with the
exponent pre-reduced Mod[N] so cos/sin arguments never grow.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError

DEFAULT_TOL = 1e-10


def as_complex_matrix(a, dim: int | None = None) -> np.ndarray:
    """Coerce to a square complex ndarray, optionally of a required dimension."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise DimensionMismatchError(f"expected dimension {dim}, got {m.shape[0]}")
    return m


def _check_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def mat_mul(a, b) -> np.ndarray:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def mat_add(a, b) -> np.ndarray:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    _check_same_shape(a, b)
    return a + b


def mat_scale(scalar: complex, a) -> np.ndarray:
    return complex(scalar) * np.asarray(a, dtype=complex)


def adjoint(a) -> np.ndarray:
    return np.asarray(a, dtype=complex).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_complex_matrix(a)))


def outer_product(u, v) -> np.ndarray:
    """The rank-one operator |u><v|."""
    u, v = np.asarray(u, dtype=complex), np.asarray(v, dtype=complex)
    _check_same_shape(u, v)
    return np.outer(u, v.conj())


def max_abs(a) -> float:
    arr = np.asarray(a)
    return float(np.abs(arr).max()) if arr.size else 0.0


def approx_eq(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Entrywise max-norm comparison."""
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    _check_same_shape(a, b)
    return max_abs(a - b) <= tol


def hermiticity_residual(a) -> float:
    m = as_complex_matrix(a)
    return max_abs(m - m.conj().T)


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return hermiticity_residual(a) <= tol


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    m = as_complex_matrix(a)
    return max_abs(m @ m.conj().T - np.eye(m.shape[0])) <= tol


@lru_cache(maxsize=None)
def omega_powers(dim: int) -> np.ndarray:
    """Table of the N-th roots of unity, omega^k for k = 0..N-1."""
    k = np.arange(dim)
    table = np.cos(2 * np.pi * k / dim) + 1j * np.sin(2 * np.pi * k / dim)
    table.setflags(write=False)
    return table


def omega_power(dim: int, k: int) -> complex:
    """omega^k with the exponent reduced Mod[N] before evaluation."""
    return complex(omega_powers(dim)[k % dim])


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random full-rank density matrix (Wishart construction)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def min_eigenvalue(a) -> float:
    """Smallest eigenvalue of a Hermitian matrix (diagnostic use only)."""
    return float(np.linalg.eigvalsh(as_complex_matrix(a)).min())


def trace_distance(a, b) -> float:
    """(1/2) * trace norm of a - b, for Hermitian a, b."""
    diff = as_complex_matrix(a) - as_complex_matrix(b)
    return float(np.abs(np.linalg.eigvalsh(diff)).sum() / 2)
