import numpy as np
import pytest

from dwwt.errors import InvalidDensityMatrixError, MixedParametersError
from dwwt.linalg import random_density_matrix, trace_distance
from dwwt.lines import phase_param
from dwwt.mub import all_basis_labels, mub_state, reference_basis, xz_basis
from dwwt.tomography import (
    MeasurementRecord,
    check_density_matrix,
    reconstruct,
    sample_probs,
    simulate_probs,
    wigner_from_probs,
)
from dwwt.wigner import radon, wwt_trace


def test_check_density_matrix():
    assert check_density_matrix(np.eye(3) / 3).shape == (3, 3)
    with pytest.raises(InvalidDensityMatrixError):
        check_density_matrix(np.eye(3))
    bad = np.eye(3) / 3 + 0j
    bad[0, 1] = 0.5
    with pytest.raises(InvalidDensityMatrixError):
        check_density_matrix(bad)


def test_simulate_maximally_mixed():
    rec = simulate_probs(np.eye(5) / 5)
    for basis in all_basis_labels(5):
        assert np.abs(rec.probs[basis] - 0.2).max() < 1e-12


def test_simulate_position_projector():
    proj = np.zeros((5, 5), dtype=complex)
    proj[1, 1] = 1
    rec = simulate_probs(proj)
    assert np.abs(rec.probs[reference_basis(5)] - np.eye(5)[1]).max() < 1e-12
    for b in range(5):
        assert np.abs(rec.probs[xz_basis(5, b)] - 0.2).max() < 1e-12


def test_simulate_eigenstate_one_hot():
    state = mub_state(3, xz_basis(5, 2))
    rho = np.outer(state.ket, state.ket.conj())
    rec = simulate_probs(rho)
    assert np.abs(rec.probs[xz_basis(5, 2)] - np.eye(5)[3]).max() < 1e-12


def test_sample_determinism_and_counts():
    rng = np.random.default_rng(10)
    rho = random_density_matrix(5, rng)
    r1 = sample_probs(rho, shots=200, seed=9)
    r2 = sample_probs(rho, shots=200, seed=9)
    r3 = sample_probs(rho, shots=200, seed=10)
    assert r1.sample_count == 200
    any_diff = False
    for basis in all_basis_labels(5):
        assert np.array_equal(r1.probs[basis], r2.probs[basis])
        assert abs(r1.probs[basis].sum() - 1.0) < 1e-12
        assert np.all(r1.probs[basis] * 200 == np.round(r1.probs[basis] * 200))
        any_diff = any_diff or not np.array_equal(r1.probs[basis], r3.probs[basis])
    assert any_diff


def test_sample_single_shot_one_hot():
    rng = np.random.default_rng(2)
    rho = random_density_matrix(3, rng)
    rec = sample_probs(rho, shots=1, seed=5)
    for basis in all_basis_labels(3):
        vec = rec.probs[basis]
        assert sorted(vec.tolist()) == [0.0, 0.0, 1.0]


def test_sample_rejects_zero_shots():
    with pytest.raises(ValueError):
        sample_probs(np.eye(3) / 3, shots=0, seed=1)


def test_wigner_from_probs_matches_transform():
    rng = np.random.default_rng(33)
    for n in (3, 5, 7):
        rho = random_density_matrix(n, rng)
        rec = simulate_probs(rho)
        for ctext in ("0", "-1/2"):
            c = phase_param(ctext, n)
            w = wigner_from_probs(rec, c)
            assert np.abs(w.values - wwt_trace(rho, c).values).max() < 1e-10
            assert abs(w.values.sum() / n - 1.0) < 1e-10


def test_wigner_from_probs_mixed_state_constant():
    rec = simulate_probs(np.eye(5) / 5)
    w = wigner_from_probs(rec, phase_param("0", 5))
    assert np.abs(w.values - 0.2).max() < 1e-12


def test_wigner_from_probs_dim_mismatch():
    rec = simulate_probs(np.eye(3) / 3)
    with pytest.raises(MixedParametersError):
        wigner_from_probs(rec, phase_param("0", 5))


def test_radon_recovers_record():
    rng = np.random.default_rng(44)
    rho = random_density_matrix(5, rng)
    rec = simulate_probs(rho)
    for ctext in ("0", "-1/2"):
        c = phase_param(ctext, 5)
        w = wigner_from_probs(rec, c)
        for basis in all_basis_labels(5):
            assert np.abs(radon(w, basis) - rec.probs[basis]).max() < 1e-9


def test_reconstruct_round_trip():
    rng = np.random.default_rng(55)
    for n in (3, 5, 7):
        rho = random_density_matrix(n, rng)
        rec = simulate_probs(rho)
        for ctext in ("0", "-1/2"):
            back = reconstruct(rec, phase_param(ctext, n))
            assert np.abs(back - rho).max() < 1e-9
            assert abs(np.trace(back) - 1) < 1e-9
            assert np.abs(back - back.conj().T).max() < 1e-9


def test_reconstruct_projector():
    proj = np.zeros((5, 5), dtype=complex)
    proj[2, 2] = 1
    back = reconstruct(simulate_probs(proj), phase_param("-1/2", 5))
    assert np.abs(back - proj).max() < 1e-9


def test_reconstruction_independent_of_c():
    rng = np.random.default_rng(66)
    rho = random_density_matrix(5, rng)
    rec = simulate_probs(rho)
    back0 = reconstruct(rec, phase_param("0", 5))
    backh = reconstruct(rec, phase_param("-1/2", 5))
    assert np.abs(back0 - backh).max() < 1e-9


def test_sampled_reconstruction_converges():
    rng = np.random.default_rng(2101)
    g = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    c = phase_param("-1/2", 5)
    exact = simulate_probs(rho)
    rec = sample_probs(rho, shots=10**6, seed=0)
    dev = max(
        float(np.abs(rec.probs[b] - exact.probs[b]).max()) for b in all_basis_labels(5)
    )
    assert dev <= 5e-3

    dists = [
        trace_distance(reconstruct(sample_probs(rho, shots=s, seed=0), c), rho)
        for s in (10**3, 10**4, 10**5, 10**6)
    ]
    assert all(a > b for a, b in zip(dists, dists[1:])), dists


def test_record_requires_all_bases():
    rec = simulate_probs(np.eye(3) / 3)
    partial = dict(rec.probs)
    partial.pop(reference_basis(3))
    with pytest.raises(MixedParametersError):
        MeasurementRecord(dim=3, probs=partial)
