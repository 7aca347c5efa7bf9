import numpy as np
import pytest

from ncwitness import qmat, states
from ncwitness.tomography import (
    LABELS,
    TomographyRecord,
    linear_inversion,
    measure_all,
    mv_from_tomography,
    nearest_density,
    project_simplex,
    reconstruct,
)
from ncwitness.witness import C_OPT

import oracles


def test_labels():
    assert len(LABELS) == 15 and len(set(LABELS)) == 15 and "II" not in LABELS


def test_mixed_record(mixed):
    assert np.all(measure_all(mixed).values == 0)


def test_zero_record(zero):
    rec = measure_all(zero).as_dict()
    for label, v in rec.items():
        assert v == pytest.approx(1.0 if label in ("ZI", "IZ", "ZZ") else 0.0, abs=1e-15)


def test_sigma_record(sigma):
    rec = measure_all(sigma).as_dict()
    # direct traces of Pauli pairs against the 4x4 matrix
    expected = {label: np.real(np.trace(sigma @ qmat.tensor(qmat.PAULI[label[0]], qmat.PAULI[label[1]])))
                for label in LABELS}
    assert rec == pytest.approx(expected, abs=1e-15)
    nonzero = {k: v for k, v in rec.items() if abs(v) > 1e-12}
    assert nonzero == pytest.approx({"IZ": 0.5, "IX": 0.5, "ZZ": 0.5, "ZX": -0.5})


def test_noise_is_seeded(sigma):
    a = measure_all(sigma, 0.1, seed=3)
    b = measure_all(sigma, 0.1, seed=3)
    c = measure_all(sigma, 0.1, seed=4)
    assert np.array_equal(a.values, b.values) and not np.array_equal(a.values, c.values)
    with pytest.raises(ValueError):
        measure_all(sigma, -0.1)


def test_record_validation():
    with pytest.raises(ValueError):
        TomographyRecord(LABELS[:14], np.zeros(14))
    with pytest.raises(ValueError):
        TomographyRecord(LABELS[:14] + ("XX",), np.zeros(15))
    rec = TomographyRecord.from_json(measure_all(states.sigma_ncc(), 0.01, 5).to_json())
    assert rec.seed == 5 and rec.noise_sigma == 0.01


def test_round_trip_random():
    for seed in range(200):
        rho = states.random_density(4, seed)
        assert qmat.fidelity(reconstruct(measure_all(rho)), rho) >= 1 - 1e-9


def test_empty_record_is_mixed():
    rec = TomographyRecord(LABELS, np.zeros(15))
    assert np.allclose(reconstruct(rec), np.eye(4) / 4, atol=1e-15)


def test_noisy_sigma_regression(sigma):
    fids = [qmat.fidelity(reconstruct(measure_all(sigma, 0.05, s)), sigma) for s in range(100)]
    assert np.mean(fids) >= 0.97
    assert np.mean(fids) == pytest.approx(0.978126, abs=1e-6)


@pytest.mark.parametrize("make, expected", [
    (states.sigma_ncc, -0.067862),
    (lambda: np.eye(4) / 4, 0.119638),
    (lambda: states.basis_state("00"), C_OPT),
])
def test_mv_from_ideal_record(make, expected):
    assert mv_from_tomography(measure_all(make())) == pytest.approx(expected, abs=1e-9)


def test_adversarial_records_stay_physical():
    for seed in range(200):
        rec = measure_all(states.random_density(4, seed), 1.0, seed)
        assert qmat.is_density(reconstruct(rec))


def test_projection_matches_bruteforce():
    checked = 0
    for seed in range(100):
        rec = measure_all(states.random_pure(4, seed), 0.3, seed)
        raw = linear_inversion(rec)
        evals = np.linalg.eigvalsh(raw)
        if evals.min() >= 0:
            continue
        checked += 1
        assert np.allclose(project_simplex(evals), oracles.simplex_projection_bruteforce(evals), atol=1e-12)
        out = nearest_density(raw)
        # no eigenvalue-shifted candidate in the same eigenbasis is closer
        _, vecs = np.linalg.eigh(raw)
        best = oracles.simplex_projection_bruteforce(evals)
        cand = (vecs * best) @ vecs.conj().T
        assert np.linalg.norm(out - raw) <= np.linalg.norm(cand - raw) + 1e-12
    assert checked >= 50


def test_project_simplex_fixed_point():
    p = np.array([0.1, 0.2, 0.3, 0.4])
    assert np.allclose(project_simplex(p), p)
