"""Clock and shift unitaries on an N-dimensional space, with N an odd prime.

Z multiplies position states by roots of unity, X shifts them cyclically, and
together they satisfy Z X = omega X Z.  The position and momentum operators are
recovered from them spectrally: Z = omega^qhat and X = omega^(-phat).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NonUnitaryInputError
from .gf import check_dimension
from .linalg import as_complex_matrix, is_unitary, omega_powers


@dataclass(frozen=True, eq=False)
class SchwingerPair:
    """The pair (Z, X) acting on C^dim.

    Z is diagonal with entries omega^q; X is the cyclic shift sending
    |q> to |q+1 mod dim>.  Both are order-dim unitaries.
    """

    dim: int
    Z: np.ndarray
    X: np.ndarray


@lru_cache(maxsize=None)
def build_schwinger(dim: int) -> SchwingerPair:
    check_dimension(dim)
    Z = np.diag(omega_powers(dim)).astype(complex)
    X = np.zeros((dim, dim), dtype=complex)
    for q in range(dim):
        X[(q + 1) % dim, q] = 1.0
    Z.setflags(write=False)
    X.setflags(write=False)
    return SchwingerPair(dim=dim, Z=Z, X=X)


def op_power(u, k: int) -> np.ndarray:
    """u^k for integer k; negative powers go through the adjoint (exact for unitaries)."""
    m = as_complex_matrix(u)
    if not is_unitary(m):
        raise NonUnitaryInputError("op_power requires a unitary matrix")
    if k < 0:
        m = m.conj().T
        k = -k
    return np.linalg.matrix_power(m, k)


def position_op(dim: int) -> np.ndarray:
    """qhat = diag(0, 1, ..., dim-1)."""
    check_dimension(dim)
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def momentum_ket(dim: int, k: int) -> np.ndarray:
    """|p=k> = (1/sqrt(dim)) sum_q omega^(q k) |q>."""
    check_dimension(dim)
    table = omega_powers(dim)
    ket = table[(np.arange(dim) * k) % dim] / np.sqrt(dim)
    return ket.astype(complex)


def momentum_op(dim: int) -> np.ndarray:
    """phat assembled from Fourier projectors, eigenvalues fixed to 0..dim-1."""
    check_dimension(dim)
    p = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        ket = momentum_ket(dim, k)
        p += k * np.outer(ket, ket.conj())
    return p


def phase_exp(dim: int, h, sign: int = 1) -> np.ndarray:
    """exp(sign * 2*pi*i * h / dim) of a Hermitian h, built spectrally."""
    m = as_complex_matrix(h)
    vals, vecs = np.linalg.eigh(m)
    phases = np.exp(sign * 2j * np.pi * vals / dim)
    return (vecs * phases) @ vecs.conj().T


def commutation_residual(pair: SchwingerPair) -> float:
    """Max-norm deviation of Z X - omega X Z from zero."""
    omega = complex(omega_powers(pair.dim)[1])
    return float(np.abs(pair.Z @ pair.X - omega * pair.X @ pair.Z).max())
