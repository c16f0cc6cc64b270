"""Estimator-style front ends over the functional core.

DiscreteWignerTransform maps batches of Hermitian matrices to flattened
phase-space tables and back; MubTomography fits a density matrix from a
measurement record.  Both follow the fit/transform convention with
parameters stored verbatim and fitted state in trailing-underscore
attributes.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import DimensionMismatchError
from .lines import phase_param
from .mub import BasisLabel, all_basis_labels, parse_basis_label
from .tomography import (
    MeasurementRecord,
    reconstruct,
    sample_probs,
    simulate_probs,
    wigner_from_probs,
)
from .wigner import line_operator_stack, radon, wwt_trace


def record_from_array(arr, dim: int) -> MeasurementRecord:
    """Rows are per-basis distributions ordered reference basis first, then slopes."""
    grid = np.asarray(arr, dtype=float)
    if grid.shape != (dim + 1, dim):
        raise DimensionMismatchError(
            f"expected a ({dim + 1}, {dim}) probability array, got {grid.shape}"
        )
    probs = {}
    for row, basis in zip(grid, all_basis_labels(dim)):
        vec = row.copy()
        vec.setflags(write=False)
        probs[basis] = vec
    return MeasurementRecord(dim=dim, probs=probs)


class DiscreteWignerTransform(BaseEstimator, TransformerMixin):
    """Forward and inverse phase-space transform over batches of operators.

    Samples are dim x dim complex matrices, accepted either stacked with
    shape (n_samples, dim, dim) or flattened row-major to (n_samples, dim*dim).
    transform returns real tables flattened q-major; inverse_transform maps
    tables back to matrices.
    """

    def __init__(self, dim: int = 3, c="-1/2"):
        self.dim = dim
        self.c = c

    def fit(self, X=None, y=None):
        self.c_ = phase_param(self.c, self.dim)
        self.operators_ = line_operator_stack(self.c_)
        self.n_features_in_ = self.dim * self.dim
        return self

    def _as_matrix_batch(self, X) -> np.ndarray:
        dim = self.dim
        arr = np.asarray(X, dtype=complex)
        if arr.ndim == 2 and arr.shape == (dim, dim):
            return arr[np.newaxis]
        if arr.ndim == 2 and arr.shape[1] == dim * dim:
            return arr.reshape(-1, dim, dim)
        if arr.ndim == 3 and arr.shape[1:] == (dim, dim):
            return arr
        raise DimensionMismatchError(
            f"expected samples of shape ({dim}, {dim}) or length {dim * dim}, got {arr.shape}"
        )

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "operators_")
        batch = self._as_matrix_batch(X)
        out = np.empty((len(batch), self.dim * self.dim))
        for i, mat in enumerate(batch):
            out[i] = wwt_trace(mat, self.c_).values.reshape(-1)
        return out

    def inverse_transform(self, X) -> np.ndarray:
        check_is_fitted(self, "operators_")
        dim = self.dim
        tables = np.asarray(X, dtype=float)
        if tables.ndim == 1 and tables.size == dim * dim:
            tables = tables[np.newaxis]
        if tables.ndim == 2 and tables.shape == (dim, dim):
            tables = tables.reshape(1, dim * dim)
        if tables.ndim != 2 or tables.shape[1] != dim * dim:
            raise DimensionMismatchError(
                f"expected rows of length {dim * dim}, got shape {tables.shape}"
            )
        grids = tables.reshape(-1, dim, dim)
        return np.einsum("nqp,qpij->nij", grids, self.operators_) / dim


class MubTomography(BaseEstimator):
    """Density-matrix reconstruction from per-basis outcome distributions.

    fit accepts a MeasurementRecord or a (dim+1, dim) array of probabilities
    ordered reference basis first.  When shots is set, fit_state draws that
    many samples per basis with a seeded generator instead of using exact
    Born values.
    """

    def __init__(self, dim: int = 3, c="-1/2", shots: int | None = None, seed: int = 0):
        self.dim = dim
        self.c = c
        self.shots = shots
        self.seed = seed

    def fit(self, X, y=None):
        rec = X if isinstance(X, MeasurementRecord) else record_from_array(X, self.dim)
        if rec.dim != self.dim:
            raise DimensionMismatchError(f"record is dim {rec.dim}, estimator is dim {self.dim}")
        self.c_ = phase_param(self.c, self.dim)
        self.record_ = rec
        self.wigner_ = wigner_from_probs(rec, self.c_)
        self.density_matrix_ = reconstruct(rec, self.c_)
        return self

    def fit_state(self, rho):
        """Measure a known state (exactly, or with sampled statistics) and fit."""
        if self.shots is None:
            rec = simulate_probs(rho, self.dim)
        else:
            rec = sample_probs(rho, shots=self.shots, seed=self.seed, dim=self.dim)
        return self.fit(rec)

    def predict_probs(self, basis) -> np.ndarray:
        """Outcome distribution in one basis implied by the fitted table."""
        check_is_fitted(self, "wigner_")
        if not isinstance(basis, BasisLabel):
            basis = parse_basis_label(str(basis), self.dim)
        return radon(self.wigner_, basis)

    def wigner_values(self) -> np.ndarray:
        check_is_fitted(self, "wigner_")
        return self.wigner_.values
