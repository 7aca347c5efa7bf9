"""Gate-level and product-operator simulation of NCC preparation and detection.

Product operators use the spin normalization ``I_k,a = sigma_a / 2``. A
two-spin deviation operator is stored as a real 4x4 coefficient array ``c``
over ``{I, X, Y, Z} x {I, X, Y, Z}`` with

    operator = sum_ab c[a, b] * (sigma_a x sigma_b) / 2

so that ``c[0, 3]`` is the coefficient of ``I2z``, ``c[3, 0]`` of ``I1z`` and
``c[3, 1]`` of ``2 I1z I2x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .qmat import H, I2, X, Y, Z, dag, expect, tensor

_PAULI = (I2, X, Y, Z)
_AXES = "ixyz"


@dataclass(frozen=True)
class Gate:
    name: str
    unitary: np.ndarray
    control: int | None = None
    target: int | None = None

    def __post_init__(self):
        u = np.asarray(self.unitary, dtype=complex)
        n = u.shape[0]
        if u.shape != (n, n) or np.max(np.abs(dag(u) @ u - np.eye(n))) > 1e-10:
            raise ValueError(f"gate {self.name!r} is not unitary")
        object.__setattr__(self, "unitary", u)


def ch_gate():
    """Controlled-Hadamard, control qubit 1, target qubit 2."""
    u = np.zeros((4, 4), dtype=complex)
    u[:2, :2] = I2
    u[2:, 2:] = H
    return Gate("CH", u, control=1, target=2)


def cnot_gate():
    u = np.zeros((4, 4), dtype=complex)
    u[:2, :2] = I2
    u[2:, 2:] = X
    return Gate("CNOT", u, control=1, target=2)


def identity_gate(dim=4):
    return Gate("I", np.eye(dim, dtype=complex))


def apply_gate(rho, gate):
    rho = np.asarray(rho, dtype=complex)
    u = gate.unitary if isinstance(gate, Gate) else np.asarray(gate, dtype=complex)
    if rho.shape != u.shape:
        raise ValueError(f"dimension mismatch: state {rho.shape}, gate {u.shape}")
    return u @ rho @ dag(u)


def polarization(rho, qubit):
    """Normalized z-magnetization of one qubit; ``|0>`` has polarization +1."""
    if qubit == 1:
        op = tensor(Z, I2)
    elif qubit == 2:
        op = tensor(I2, Z)
    else:
        raise ValueError(f"qubit must be 1 or 2, got {qubit!r}")
    return expect(rho, op)


def detection_readout(rho):
    """Polarizations ``(z1, z2, z2prime)`` of the witness detection circuit.

    ``z1`` and ``z2`` are read after a CH gate; ``z2prime`` is the qubit-2
    polarization after a further CNOT on that same post-CH ensemble. The
    z-readouts do not disturb the diagonal, so the sequence is one run.
    Equivalently ``z2prime = <Z1 Z2>`` of the post-CH state.
    """
    after_ch = apply_gate(rho, ch_gate())
    after_cnot = apply_gate(after_ch, cnot_gate())
    return polarization(after_ch, 1), polarization(after_ch, 2), polarization(after_cnot, 2)


# -- product operators -------------------------------------------------------


@dataclass
class ProductOperatorState:
    coefficients: np.ndarray = field(default_factory=lambda: np.zeros((4, 4)))

    @classmethod
    def from_terms(cls, **terms):
        """Build from labels such as ``I1z=1, I2z=1`` or ``I1zI2x=-0.5``.

        A two-spin label ``IkaIlb`` stands for the operator ``2 Ika Ilb``.
        """
        c = np.zeros((4, 4))
        for label, value in terms.items():
            a, b = _parse_label(label)
            c[a, b] += value
        return cls(c)

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=complex)
        c = np.empty((4, 4))
        for a in range(4):
            for b in range(4):
                c[a, b] = np.real(np.trace(m @ tensor(_PAULI[a], _PAULI[b]))) / 2
        return cls(c)

    def to_matrix(self):
        m = np.zeros((4, 4), dtype=complex)
        for a in range(4):
            for b in range(4):
                if self.coefficients[a, b]:
                    m += self.coefficients[a, b] * tensor(_PAULI[a], _PAULI[b]) / 2
        return m

    def terms(self, atol=1e-12):
        """Nonzero coefficients keyed by product-operator label."""
        out = {}
        for a in range(4):
            for b in range(4):
                v = self.coefficients[a, b]
                if abs(v) > atol:
                    out[_label(a, b)] = float(v)
        return out

    def evolve(self, u):
        return ProductOperatorState.from_matrix(u @ self.to_matrix() @ dag(u))

    def crush_transverse(self, qubit=1):
        """Ideal gradient spatial averaging: drop terms transverse on ``qubit``."""
        c = self.coefficients.copy()
        if qubit == 1:
            c[1:3, :] = 0.0
        else:
            c[:, 1:3] = 0.0
        return ProductOperatorState(c)

    def isclose(self, other, atol=1e-12):
        return bool(np.max(np.abs(self.coefficients - other.coefficients)) <= atol)


def _label(a, b):
    if a == 0 and b == 0:
        return "E"
    if a == 0:
        return f"I2{_AXES[b]}"
    if b == 0:
        return f"I1{_AXES[a]}"
    return f"I1{_AXES[a]}I2{_AXES[b]}"


def _parse_label(label):
    if label == "E":
        return 0, 0
    a = b = 0
    rest = label
    while rest:
        if len(rest) < 3 or rest[0] != "I" or rest[1] not in "12" or rest[2] not in "xyz":
            raise ValueError(f"bad product-operator label {label!r}")
        axis = _AXES.index(rest[2])
        if rest[1] == "1":
            a = axis
        else:
            b = axis
        rest = rest[3:]
    return a, b


def pulse(angle, axis, qubit):
    """Selective rotation ``exp(-i angle I_axis)`` on one spin."""
    spin = {"x": X, "y": Y, "z": Z}[axis] / 2
    op = tensor(spin, I2) if qubit == 1 else tensor(I2, spin)
    return expm(-1j * angle * op)


def j_evolution(j_hz, t):
    """Scalar-coupling propagator ``exp(-i 2 pi J t I1z I2z)``."""
    return np.diag(np.exp(-1j * 2 * np.pi * j_hz * t / 4 * np.array([1, -1, -1, 1])))


def ncc_preparation_chain(j_hz=1.0):
    """Each step of the NCC preparation sequence starting from ``I1z + I2z``.

    Returns a list of ``(step, ProductOperatorState)`` pairs, first entry the
    initial deviation. The result does not depend on ``j_hz``.
    """
    state = ProductOperatorState.from_terms(I1z=1.0, I2z=1.0)
    steps = [("thermal", state)]
    state = state.evolve(pulse(np.pi / 2, "x", 1))
    steps.append(("(pi/2)^1_x", state))
    state = state.crush_transverse(qubit=1)
    steps.append(("spatial average", state))
    state = state.evolve(pulse(np.pi / 2, "y", 2))
    steps.append(("(pi/2)^2_y", state))
    state = state.evolve(j_evolution(j_hz, 1 / (4 * j_hz)))
    steps.append(("1/(4J)", state))
    state = state.evolve(pulse(np.pi / 2, "x", 2))
    steps.append(("(pi/2)^2_x", state))
    state = state.evolve(pulse(-np.pi / 4, "y", 2))
    steps.append(("(-pi/4)^2_y", state))
    return steps


def prepare_ncc_product_operator():
    return ncc_preparation_chain()[-1][1]
