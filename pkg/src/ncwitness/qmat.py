"""Small dense linear algebra for one- and two-qubit operators.

Matrices are plain ``numpy`` complex128 arrays. Qubit 1 (subsystem A) is the
left, most significant tensor factor, so the two-qubit basis order is
``|00>, |01>, |10>, |11>``.
"""

from __future__ import annotations

import numpy as np

HERMITIAN_ATOL = 1e-10
TRACE_ATOL = 1e-10
PSD_ATOL = 1e-9

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)


def dag(m):
    return np.conj(np.swapaxes(m, -1, -2))


def tensor(*ops):
    """Kronecker product of any number of operators (or kets), left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def ket2dm(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def allclose(a, b, atol):
    """Entrywise equality with an explicit absolute tolerance."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and bool(np.max(np.abs(a - b), initial=0.0) <= atol)


def is_hermitian(m, atol=HERMITIAN_ATOL):
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and allclose(m, dag(m), atol)


def is_density(rho, atol=PSD_ATOL):
    """True if ``rho`` is a 2x2 or 4x4 Hermitian, unit-trace, PSD matrix."""
    rho = np.asarray(rho)
    if rho.shape not in ((2, 2), (4, 4)) or not is_hermitian(rho):
        return False
    if abs(np.trace(rho) - 1) > TRACE_ATOL:
        return False
    return bool(np.linalg.eigvalsh(rho).min() >= -atol)


def validate_density(rho, dim=None):
    """Return ``rho`` as a complex array, raising ``ValueError`` if it is not a state."""
    rho = np.asarray(rho, dtype=complex)
    if dim is not None and rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} density matrix, got shape {rho.shape}")
    if rho.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"density matrix must be 2x2 or 4x4, got shape {rho.shape}")
    if not is_hermitian(rho):
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1) > TRACE_ATOL:
        raise ValueError(f"density matrix trace is {tr.real:.12g}, expected 1")
    lo = np.linalg.eigvalsh(rho).min()
    if lo < -PSD_ATOL:
        raise ValueError(f"density matrix has negative eigenvalue {lo:.3g}")
    return rho


def partial_trace(rho, keep):
    """Reduced state of a two-qubit operator.

    Parameters
    ----------
    rho : (4, 4) array
    keep : {"A", "B"}
        Subsystem to keep. ``"A"`` is qubit 1.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_trace needs a 4x4 operator, got shape {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ajbj->ab", r)
    if keep == "B":
        return np.einsum("iaib->ab", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def eig_hermitian(m):
    """Eigen-decomposition of a Hermitian matrix, eigenvalues in descending order.

    Returns ``(evals, evecs)`` with ``m = evecs @ diag(evals) @ evecs^dagger``.
    """
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m):
        raise ValueError("eig_hermitian requires a Hermitian matrix")
    evals, evecs = np.linalg.eigh((m + dag(m)) / 2)
    return evals[::-1].copy(), evecs[:, ::-1].copy()


def entropy_from_eigs(evals):
    """Shannon entropy in bits of a probability vector, ``0 log 0 = 0``."""
    p = np.clip(np.asarray(evals, dtype=float), 0.0, 1.0)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def von_neumann_entropy(rho):
    """Von Neumann entropy in bits."""
    return entropy_from_eigs(np.linalg.eigvalsh(np.asarray(rho, dtype=complex)))


# eigenvalues below this are round-off; sqrt would amplify them to ~1e-7
SPECTRAL_FLOOR = 1e-14


def sqrtm_psd(m):
    evals, evecs = np.linalg.eigh(np.asarray(m, dtype=complex))
    root = np.sqrt(np.where(evals > SPECTRAL_FLOOR, evals, 0.0))
    return (evecs * root) @ dag(evecs)


def fidelity(rho, sigma):
    """Uhlmann-Jozsa fidelity ``(Tr sqrt(sqrt(rho) sigma sqrt(rho)))**2``."""
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    s = sqrtm_psd(rho)
    inner = s @ sigma @ s
    evals = np.linalg.eigvalsh((inner + dag(inner)) / 2)
    f = float(np.sum(np.sqrt(np.where(evals > SPECTRAL_FLOOR, evals, 0.0))) ** 2)
    return min(max(f, 0.0), 1.0)


def expect(rho, op):
    return float(np.real(np.trace(np.asarray(rho) @ np.asarray(op))))


def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    rows, cols = m.shape
    flat = m.reshape(-1)
    return {"rows": rows, "cols": cols, "re": flat.real.tolist(), "im": flat.imag.tolist()}


def matrix_from_json(obj):
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", [0.0] * len(re)), dtype=float)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if re.size != rows * cols or im.size != rows * cols:
        raise ValueError(f"matrix entries do not match rows*cols = {rows * cols}")
    return (re + 1j * im).reshape(rows, cols)


def density_to_json(rho):
    out = {"dim": int(np.asarray(rho).shape[0])}
    out.update(matrix_to_json(rho))
    return out


def density_from_json(obj):
    m = matrix_from_json(obj)
    dim = obj.get("dim", m.shape[0])
    return validate_density(m, dim=int(dim))
