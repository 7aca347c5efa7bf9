"""Simulated two-qubit Pauli tomography with linear inversion.

A record holds the 15 non-trivial Pauli expectations ``<P1 P2>``. The raw
inversion ``(I + sum_k v_k P_k) / 4`` is mapped back to a physical state by
projecting its spectrum onto the probability simplex, which gives the closest
density matrix in Frobenius norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .qmat import PAULI, dag, expect, tensor
from .witness import C_OPT, map_value_direct

LABELS = tuple(a + b for a, b in product("IXYZ", repeat=2) if a + b != "II")
_OPS = {label: tensor(PAULI[label[0]], PAULI[label[1]]) for label in LABELS}


@dataclass(frozen=True)
class TomographyRecord:
    labels: tuple[str, ...]
    values: np.ndarray
    noise_sigma: float = 0.0
    seed: int | None = None

    def __post_init__(self):
        labels = tuple(self.labels)
        values = np.asarray(self.values, dtype=float)
        if len(labels) != 15 or len(set(labels)) != 15 or set(labels) != set(LABELS):
            raise ValueError("record needs each of the 15 non-identity Pauli labels exactly once")
        if values.shape != (15,):
            raise ValueError(f"expected 15 values, got shape {values.shape}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", values)

    def as_dict(self):
        return dict(zip(self.labels, self.values.tolist()))

    def to_json(self):
        return {
            "labels": list(self.labels),
            "values": self.values.tolist(),
            "noise_sigma": self.noise_sigma,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj["labels"], obj["values"], obj.get("noise_sigma", 0.0), obj.get("seed"))
        except KeyError as exc:
            raise ValueError(f"tomography record missing key {exc}") from exc


def measure_all(rho, noise_sigma=0.0, seed=None):
    """Expectation of every Pauli pair, with optional Gaussian readout noise."""
    if noise_sigma < 0:
        raise ValueError("noise_sigma must be nonnegative")
    values = np.array([expect(rho, _OPS[label]) for label in LABELS])
    if noise_sigma > 0:
        values = values + np.random.default_rng(seed).normal(0.0, noise_sigma, size=values.shape)
    return TomographyRecord(LABELS, values, float(noise_sigma), seed)


def linear_inversion(record):
    """Unconstrained estimate ``(I + sum_k v_k P_k) / 4`` (Hermitian, unit trace)."""
    est = np.eye(4, dtype=complex)
    for label, v in zip(record.labels, record.values):
        est += v * _OPS[label]
    return est / 4


def project_simplex(v):
    """Euclidean projection of a real vector onto the probability simplex."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1
    k = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / k > 0)[0][-1]
    shift = css[rho] / (rho + 1)
    return np.maximum(v - shift, 0.0)


def nearest_density(m):
    """Closest unit-trace PSD matrix to Hermitian ``m`` in Frobenius norm."""
    m = np.asarray(m, dtype=complex)
    evals, evecs = np.linalg.eigh((m + dag(m)) / 2)
    p = project_simplex(evals)
    out = (evecs * p) @ dag(evecs)
    return (out + dag(out)) / 2


def reconstruct(record):
    return nearest_density(linear_inversion(record))


def mv_from_tomography(record, c=C_OPT):
    return map_value_direct(reconstruct(record), c).map_value
