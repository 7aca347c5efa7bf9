"""Canonical two-qubit states and seeded random samplers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import KET0, KET1, KET_PLUS, dag, ket2dm, tensor


@dataclass(frozen=True)
class PccSpec:
    """A properly classically correlated state.

    ``basis_a`` and ``basis_b`` are 2x2 unitaries whose columns are the local
    eigenbases; ``probs[i, j]`` weights ``|a_i b_j><a_i b_j|``.
    """

    basis_a: np.ndarray
    basis_b: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        for name in ("basis_a", "basis_b"):
            u = np.asarray(getattr(self, name), dtype=complex)
            if u.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2, got {u.shape}")
            if np.max(np.abs(dag(u) @ u - np.eye(2))) > 1e-10:
                raise ValueError(f"{name} columns are not orthonormal")
            object.__setattr__(self, name, u)
        p = np.asarray(self.probs, dtype=float)
        if p.shape != (2, 2):
            raise ValueError(f"probs must be 2x2, got {p.shape}")
        if p.min() < 0 or abs(p.sum() - 1) > 1e-12:
            raise ValueError("probs must be a joint probability distribution")
        object.__setattr__(self, "probs", p)

    def product_projectors(self):
        """The four projectors ``|a_i><a_i| x |b_j><b_j|`` keyed by ``(i, j)``."""
        return {
            (i, j): tensor(ket2dm(self.basis_a[:, i]), ket2dm(self.basis_b[:, j]))
            for i in range(2)
            for j in range(2)
        }


def sigma_ncc():
    """``(|00><00| + |1+><1+|) / 2``: separable but nonclassically correlated."""
    return 0.5 * ket2dm(tensor(KET0, KET0)) + 0.5 * ket2dm(tensor(KET1, KET_PLUS))


def bell_state():
    """``(|00> + |11>)/sqrt(2)`` as a density matrix."""
    psi = (tensor(KET0, KET0) + tensor(KET1, KET1)) / np.sqrt(2)
    return ket2dm(psi)


def maximally_mixed(dim=4):
    return np.eye(dim, dtype=complex) / dim


def basis_state(bits):
    """Computational basis projector, e.g. ``basis_state("00")``."""
    kets = {"0": KET0, "1": KET1}
    return ket2dm(tensor(*(kets[b] for b in bits)))


def product_state(rho_a, rho_b):
    return tensor(rho_a, rho_b)


def pcc_state(spec):
    rho = np.zeros((4, 4), dtype=complex)
    for (i, j), proj in spec.product_projectors().items():
        rho += spec.probs[i, j] * proj
    return rho


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_unitary(dim, seed=None, size=None):
    """Haar unitary via QR of a complex Ginibre matrix (phase-corrected)."""
    rng = _rng(seed)
    shape = (dim, dim) if size is None else (size, dim, dim)
    g = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def random_density(dim, seed=None):
    """Ginibre-induced random state ``G G^dagger / Tr``."""
    if dim not in (2, 4):
        raise ValueError(f"dim must be 2 or 4, got {dim}")
    rng = _rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ dag(g)
    rho = (rho + dag(rho)) / 2
    return rho / np.trace(rho).real


def random_pure(dim, seed=None):
    rng = _rng(seed)
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return ket2dm(psi / np.linalg.norm(psi))


def random_product(seed=None):
    rng = _rng(seed)
    return tensor(random_density(2, rng), random_density(2, rng))


def _simplex(rng, size):
    e = rng.exponential(size=size)
    return e / e.sum(axis=-1, keepdims=True)


def random_pcc(seed=None):
    """Random PCC state: Haar local bases and uniform joint probabilities.

    Returns ``(spec, rho)``.
    """
    rng = _rng(seed)
    spec = PccSpec(
        basis_a=random_unitary(2, rng),
        basis_b=random_unitary(2, rng),
        probs=_simplex(rng, 4).reshape(2, 2),
    )
    return spec, pcc_state(spec)


def random_pcc_batch(n, seed=None):
    """``n`` random PCC density matrices as an ``(n, 4, 4)`` array.

    Same ensemble as :func:`random_pcc`, drawn in bulk for large-sample checks.
    """
    rng = _rng(seed)
    ua = random_unitary(2, rng, size=n)
    ub = random_unitary(2, rng, size=n)
    probs = _simplex(rng, (n, 4))
    # product basis U_A x U_B; the state is U diag(p) U^dagger
    u = np.einsum("nac,nbd->nabcd", ua, ub).reshape(n, 4, 4)
    return np.einsum("nij,nj,nkj->nik", u, probs, u.conj())
