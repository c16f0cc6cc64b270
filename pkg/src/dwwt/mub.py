"""Mutually unbiased bases for odd prime dimension.

For each slope b there is an orthonormal eigenbasis of X Z^b with amplitudes

    <q| m;b > = omega^(b q(q-1)/2 - q m) / sqrt(N),

and the reference basis (eigenstates of Z, labeled "ddot0" in serialized
output) completes the family to N+1 bases.  Any two states drawn from
different bases overlap with squared magnitude exactly 1/N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError, UnknownBasisError, WrongBasisKindError
from .gf import GfElement, check_dimension, gf
from .linalg import omega_powers
from .schwinger import SchwingerPair

REFERENCE_LABEL = "ddot0"


@dataclass(frozen=True)
class BasisLabel:
    """One of the N+1 basis labels: the reference basis or the slope-b eigenbasis.

    slope is None for the reference basis and a GfElement otherwise.
    """

    dim: int
    slope: GfElement | None = None

    def __post_init__(self):
        check_dimension(self.dim)
        if self.slope is not None and self.slope.modulus != self.dim:
            raise DimensionMismatchError(
                f"slope modulus {self.slope.modulus} does not match dim {self.dim}"
            )

    @property
    def is_reference(self) -> bool:
        return self.slope is None

    @property
    def text(self) -> str:
        """Serialized form: 'ddot0' for the reference basis, else the slope digit."""
        if self.slope is None:
            return REFERENCE_LABEL
        return str(self.slope.value)

    def __repr__(self) -> str:
        return f"BasisLabel({self.text}, dim={self.dim})"


def reference_basis(dim: int) -> BasisLabel:
    return BasisLabel(dim=dim)


def xz_basis(dim: int, slope: int | GfElement) -> BasisLabel:
    if not isinstance(slope, GfElement):
        slope = gf(slope, dim)
    return BasisLabel(dim=dim, slope=slope)


def all_basis_labels(dim: int) -> tuple[BasisLabel, ...]:
    """All N+1 labels, reference first, then slopes 0..N-1."""
    check_dimension(dim)
    return (reference_basis(dim),) + tuple(xz_basis(dim, b) for b in range(dim))


def parse_basis_label(text: str, dim: int) -> BasisLabel:
    """Inverse of BasisLabel.text; raises UnknownBasis for anything else."""
    check_dimension(dim)
    stripped = text.strip()
    if stripped == REFERENCE_LABEL:
        return reference_basis(dim)
    try:
        b = int(stripped)
    except ValueError:
        raise UnknownBasisError(f"unknown basis label {text!r}") from None
    if not 0 <= b < dim:
        raise UnknownBasisError(f"basis slope {b} out of range for dim {dim}")
    return xz_basis(dim, b)


@dataclass(frozen=True, eq=False)
class MubState:
    basis: BasisLabel
    index: GfElement
    ket: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.dim


@lru_cache(maxsize=None)
def _basis_kets(dim: int, slope: int | None) -> np.ndarray:
    """Row m holds the ket of state m in the given basis; rows are read-only."""
    if slope is None:
        kets = np.eye(dim, dtype=complex)
    else:
        q = np.arange(dim)
        kets = np.empty((dim, dim), dtype=complex)
        table = omega_powers(dim)
        # q(q-1) is even, so the slope term is an integer before reduction.
        base = slope * (q * (q - 1) // 2)
        for m in range(dim):
            kets[m] = table[(base - q * m) % dim] / np.sqrt(dim)
    kets.setflags(write=False)
    return kets


def mub_state(m: int | GfElement, basis: BasisLabel | int | str, dim: int | None = None) -> MubState:
    """State m of the given basis; basis may be a label, a slope, or label text."""
    if isinstance(basis, BasisLabel):
        label = basis
    elif isinstance(basis, str):
        if dim is None:
            raise DimensionMismatchError("dim is required when basis is given as text")
        label = parse_basis_label(basis, dim)
    else:
        if dim is None:
            raise DimensionMismatchError("dim is required when basis is given as a slope")
        label = xz_basis(dim, basis)
    if not isinstance(m, GfElement):
        m = gf(m, label.dim)
    elif m.modulus != label.dim:
        raise DimensionMismatchError(
            f"index modulus {m.modulus} does not match dim {label.dim}"
        )
    slope = None if label.slope is None else label.slope.value
    ket = _basis_kets(label.dim, slope)[m.value]
    return MubState(basis=label, index=m, ket=ket)


def basis_kets(label: BasisLabel) -> np.ndarray:
    """All N kets of a basis as rows of a read-only (N, N) array."""
    slope = None if label.slope is None else label.slope.value
    return _basis_kets(label.dim, slope)


def overlap_magnitude_sq(s1: MubState, s2: MubState) -> float:
    if s1.dim != s2.dim:
        raise DimensionMismatchError(f"dimension mismatch: {s1.dim} vs {s2.dim}")
    return float(abs(np.vdot(s1.ket, s2.ket)) ** 2)


def eigen_check(state: MubState, pair: SchwingerPair) -> float:
    """Residual norm of the eigenvalue equation X Z^b |m;b> = omega^m |m;b>."""
    if state.basis.is_reference:
        raise WrongBasisKindError("eigen_check applies to the slope bases only")
    if state.dim != pair.dim:
        raise DimensionMismatchError(f"dimension mismatch: {state.dim} vs {pair.dim}")
    b = state.basis.slope.value
    op = pair.X @ np.linalg.matrix_power(pair.Z, b)
    eig = omega_powers(pair.dim)[state.index.value]
    return float(np.linalg.norm(op @ state.ket - eig * state.ket))
