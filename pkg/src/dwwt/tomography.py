"""Measurement-side pipeline: MUB probabilities -> Wigner table -> density matrix.

The probability of finding the state in member m of basis b equals the Radon
sum of the Wigner function along the line m(b) = m, so a full set of Born
probabilities over all N+1 bases determines the table

    W(q,p) = sum_b probs[b][m(b)] - 1

and, through the inverse transform, the density matrix itself.  Everything
past exact probabilities (finite-shot sampling) is plumbing for experiments
with simulated statistics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDensityMatrixError, MixedParametersError
from .gf import check_dimension
from .linalg import as_complex_matrix, hermiticity_residual
from .lines import PhaseParam, line_value, phase_point
from .mub import BasisLabel, all_basis_labels, basis_kets
from .wigner import WignerTable, inverse_wwt

DENSITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MeasurementRecord:
    """Per-basis outcome distributions, one length-N vector per basis label."""

    dim: int
    probs: dict[BasisLabel, np.ndarray]
    sample_count: int | None = None

    def __post_init__(self):
        check_dimension(self.dim)
        labels = all_basis_labels(self.dim)
        if set(self.probs) != set(labels):
            raise MixedParametersError(
                f"record must hold exactly one entry per basis label of dim {self.dim}"
            )

    def vector(self, basis: BasisLabel) -> np.ndarray:
        return self.probs[basis]


def check_density_matrix(rho, dim: int | None = None) -> np.ndarray:
    """Validate Hermiticity and unit trace; positivity is deliberately not enforced."""
    mat = as_complex_matrix(rho, dim)
    if hermiticity_residual(mat) > DENSITY_TOL:
        raise InvalidDensityMatrixError("density matrix must be Hermitian")
    if abs(np.trace(mat) - 1) > DENSITY_TOL:
        raise InvalidDensityMatrixError(
            f"density matrix must have unit trace, got {np.trace(mat):.12g}"
        )
    return mat


def simulate_probs(rho, dim: int | None = None) -> MeasurementRecord:
    """Exact Born probabilities <m;b|rho|m;b> in every basis."""
    mat = check_density_matrix(rho, dim)
    n = mat.shape[0]
    probs = {}
    for basis in all_basis_labels(n):
        kets = basis_kets(basis)
        p = np.einsum("mi,ij,mj->m", kets.conj(), mat, kets).real
        p.setflags(write=False)
        probs[basis] = p
    return MeasurementRecord(dim=n, probs=probs)


def sample_probs(rho, shots: int, seed: int, dim: int | None = None) -> MeasurementRecord:
    """Empirical frequencies from `shots` inverse-CDF draws per basis.

    Each basis gets its own generator seeded from (seed, basis position) so
    bases could be sampled concurrently without changing the output.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    exact = simulate_probs(rho, dim)
    n = exact.dim
    probs = {}
    for position, basis in enumerate(all_basis_labels(n)):
        p = np.clip(exact.probs[basis], 0.0, None)
        cdf = np.cumsum(p / p.sum())
        rng = np.random.default_rng([seed, position])
        draws = np.searchsorted(cdf, rng.random(shots), side="right")
        freq = np.bincount(draws, minlength=n)[:n] / shots
        freq.setflags(write=False)
        probs[basis] = freq
    return MeasurementRecord(dim=n, probs=probs, sample_count=shots)


def wigner_from_probs(rec: MeasurementRecord, c: PhaseParam) -> WignerTable:
    """W(q,p) = sum_b probs[b][m(b)] - 1, real by construction."""
    if rec.dim != c.dim:
        raise MixedParametersError(f"record is dim {rec.dim}, parameter is Mod[{c.dim}]")
    dim = rec.dim
    labels = all_basis_labels(dim)
    values = np.full((dim, dim), -1.0)
    for q in range(dim):
        for p in range(dim):
            point = phase_point(q, p, dim)
            for basis in labels:
                values[q, p] += rec.probs[basis][line_value(point, c, basis).value]
    values.setflags(write=False)
    return WignerTable(dim=dim, c=c, values=values)


def reconstruct(rec: MeasurementRecord, c: PhaseParam) -> np.ndarray:
    """Density matrix recovered from a record; Hermitian with unit trace by construction.

    Finite-statistics records can yield negative eigenvalues; no positivity
    projection is applied.
    """
    return inverse_wwt(wigner_from_probs(rec, c))
