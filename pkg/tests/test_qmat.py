import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ncwitness import qmat, states
from ncwitness.qmat import I2, X, Z, KET0, KET1, KET_PLUS, KET_MINUS

import oracles

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


class TestTensor:
    def test_identity(self):
        assert np.array_equal(qmat.tensor(I2, I2), np.eye(4))

    def test_basis_projector(self):
        out = qmat.tensor(qmat.ket2dm(KET0), qmat.ket2dm(KET0))
        expected = np.zeros((4, 4))
        expected[0, 0] = 1
        assert np.array_equal(out, expected)

    def test_z_tensor_x_blocks(self):
        out = qmat.tensor(Z, X)
        expected = np.block([[X, np.zeros((2, 2))], [np.zeros((2, 2)), -X]])
        assert np.array_equal(out, expected)

    def test_associative_and_mixed_product(self):
        rng = np.random.default_rng(1)
        # integer entries keep every product exact, so regrouping is bitwise equal
        a, b, c = (rng.integers(-9, 9, (2, 2)) + 1j * rng.integers(-9, 9, (2, 2)) for _ in range(3))
        assert np.array_equal(qmat.tensor(qmat.tensor(a, b), c), qmat.tensor(a, qmat.tensor(b, c)))
        a, b, c, d = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in range(4))
        lhs = qmat.tensor(a, b) @ qmat.tensor(c, d)
        assert np.max(np.abs(lhs - qmat.tensor(a @ c, b @ d))) <= 1e-12


class TestPartialTrace:
    def test_bell_reduces_to_mixed(self, bell):
        assert qmat.allclose(qmat.partial_trace(bell, "A"), I2 / 2, 1e-12)

    def test_product_state(self):
        ra, rb = states.random_density(2, 3), states.random_density(2, 4)
        assert qmat.allclose(qmat.partial_trace(qmat.tensor(ra, rb), "B"), rb, 1e-12)
        assert qmat.allclose(qmat.partial_trace(qmat.tensor(ra, rb), "A"), ra, 1e-12)

    def test_sigma_keep_a(self, sigma):
        assert qmat.allclose(qmat.partial_trace(sigma, "A"), np.diag([0.5, 0.5]), 1e-12)

    def test_sigma_keep_b_matches_bruteforce(self, sigma):
        # |0><0|/2 + |+><+|/2
        expected = np.array([[0.75, 0.25], [0.25, 0.25]])
        assert qmat.allclose(qmat.partial_trace(sigma, "B"), expected, 1e-12)
        assert qmat.allclose(oracles.reduced(sigma, "B"), expected, 1e-12)

    def test_random_products(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            ra, rb = states.random_density(2, rng), states.random_density(2, rng)
            assert np.max(np.abs(qmat.partial_trace(qmat.tensor(ra, rb), "A") - ra)) <= 1e-12
            assert np.max(np.abs(qmat.partial_trace(qmat.tensor(ra, rb), "B") - rb)) <= 1e-12

    def test_errors(self):
        with pytest.raises(ValueError):
            qmat.partial_trace(np.eye(2), "A")
        with pytest.raises(ValueError):
            qmat.partial_trace(np.eye(4) / 4, "C")


class TestEigHermitian:
    def test_diagonal(self):
        evals, evecs = qmat.eig_hermitian(np.diag([1.0, 3.0]))
        assert np.allclose(evals, [3, 1])
        assert np.allclose(np.abs(evecs), [[0, 1], [1, 0]])

    def test_pauli_x(self):
        evals, evecs = qmat.eig_hermitian(X)
        assert np.allclose(evals, [1, -1])
        assert abs(abs(np.vdot(evecs[:, 0], KET_PLUS)) - 1) < 1e-12
        assert abs(abs(np.vdot(evecs[:, 1], KET_MINUS)) - 1) < 1e-12

    def test_sigma_spectrum(self, sigma):
        evals, _ = qmat.eig_hermitian(sigma)
        assert np.allclose(evals, [0.5, 0.5, 0, 0], atol=1e-12)

    def test_reconstruction_1000_random(self):
        rng = np.random.default_rng(11)
        worst = 0.0
        for _ in range(1000):
            m = random_hermitian(rng, int(rng.choice([2, 4])))
            evals, v = qmat.eig_hermitian(m)
            assert np.all(np.diff(evals) <= 0)
            worst = max(worst, np.max(np.abs(v @ np.diag(evals) @ v.conj().T - m)),
                        np.max(np.abs(v.conj().T @ v - np.eye(len(m)))))
        assert worst <= 1e-9

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            qmat.eig_hermitian(np.array([[0, 1], [0, 0]]))


class TestEntropy:
    def test_values(self, zero, mixed, sigma):
        assert qmat.von_neumann_entropy(zero) == pytest.approx(0, abs=1e-12)
        assert qmat.von_neumann_entropy(mixed) == pytest.approx(2, abs=1e-12)
        assert qmat.von_neumann_entropy(sigma) == pytest.approx(1, abs=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(seeds)
    def test_bounds_and_unitary_invariance(self, seed):
        rng = np.random.default_rng(seed)
        rho = states.random_density(4, rng)
        u = states.random_unitary(4, rng)
        s = qmat.von_neumann_entropy(rho)
        assert -1e-12 <= s <= 2 + 1e-12
        assert abs(qmat.von_neumann_entropy(u @ rho @ u.conj().T) - s) <= 1e-9
        assert abs(s - oracles.entropy(rho)) <= 1e-12


class TestFidelity:
    def test_identities(self, zero, mixed):
        rho = states.random_density(4, 5)
        assert qmat.fidelity(rho, rho) == pytest.approx(1, abs=1e-9)
        assert qmat.fidelity(zero, states.basis_state("11")) == pytest.approx(0, abs=1e-12)
        assert qmat.fidelity(zero, mixed) == pytest.approx(0.25, abs=1e-12)

    def test_symmetric(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            a, b = states.random_density(4, rng), states.random_density(4, rng)
            assert abs(qmat.fidelity(a, b) - qmat.fidelity(b, a)) <= 1e-8

    def test_pure_states_overlap(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            phi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            psi, phi = psi / np.linalg.norm(psi), phi / np.linalg.norm(phi)
            f = qmat.fidelity(qmat.ket2dm(psi), qmat.ket2dm(phi))
            assert abs(f - abs(np.vdot(psi, phi)) ** 2) <= 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            qmat.fidelity(np.eye(2) / 2, np.eye(4) / 4)


class TestDensityValidation:
    def test_accepts_states(self, sigma):
        assert qmat.is_density(sigma)
        qmat.validate_density(sigma, dim=4)

    @pytest.mark.parametrize("bad", [
        np.diag([1.0, 0.5, 0, 0]),
        np.diag([1.5, -0.5, 0, 0]),
        np.array([[0.5, 1], [0, 0.5]]),
        np.eye(3) / 3,
    ])
    def test_rejects(self, bad):
        assert not qmat.is_density(bad)
        with pytest.raises(ValueError):
            qmat.validate_density(bad)


def test_json_round_trip(sigma):
    obj = json.loads(json.dumps(qmat.density_to_json(sigma)))
    assert obj["dim"] == 4 and obj["rows"] == 4 and len(obj["re"]) == 16 and len(obj["im"]) == 16
    assert np.array_equal(qmat.density_from_json(obj), sigma)
    m = np.arange(6).reshape(2, 3) + 1j
    assert np.array_equal(qmat.matrix_from_json(qmat.matrix_to_json(m)), m)
    with pytest.raises(ValueError):
        qmat.matrix_from_json({"rows": 2, "cols": 2, "re": [1, 2, 3]})
