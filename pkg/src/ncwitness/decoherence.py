"""Free evolution of the two-spin state under T1/T2 relaxation.

Each qubit relaxes independently: amplitude damping toward ``|0>`` at rate
``1/T1`` followed by pure dephasing at rate ``1/T2 - 1/(2 T1)``, so transverse
coherences decay as ``exp(-t/T2)`` overall. The scalar coupling, if enabled, is
applied first as the unitary ``exp(-i 2 pi J t Z1 Z2 / 4)``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

import numpy as np

from .circuit import j_evolution
from .discord import discord
from .qmat import I2, Z, dag, fidelity, tensor
from .states import sigma_ncc
from .witness import C_OPT, map_value_direct

# n values of the sampled evolution times 2n/J
SAMPLE_N = (0, 1, 3, 5, 7, 9, 11, 13, 15, 20, 25, 30, 35, 40, 45, 50)


@dataclass(frozen=True)
class ChannelSpec:
    t1_q1: float
    t2_q1: float
    t1_q2: float
    t2_q2: float
    j_coupling: float = 215.0
    include_j: bool = False

    def __post_init__(self):
        for f in ("t1_q1", "t2_q1", "t1_q2", "t2_q2"):
            v = getattr(self, f)
            if not v > 0:
                raise ValueError(f"{f} must be positive, got {v}")
        for q in (1, 2):
            if self.dephasing_rate(q) < 0:
                raise ValueError(f"qubit {q}: T2 exceeds 2*T1, negative pure-dephasing rate")
        if self.include_j and not self.j_coupling > 0:
            raise ValueError("j_coupling must be positive when include_j is set")

    def times(self, qubit):
        return (self.t1_q1, self.t2_q1) if qubit == 1 else (self.t1_q2, self.t2_q2)

    def dephasing_rate(self, qubit):
        t1, t2 = self.times(qubit)
        return 1.0 / t2 - 0.5 / t1

    @classmethod
    def dephasing_only(cls, t2_q2, t2_q1=None, j_coupling=215.0):
        """Pure transverse relaxation, T1 effectively infinite."""
        return cls(1e9, t2_q1 if t2_q1 is not None else t2_q2, 1e9, t2_q2, j_coupling, False)

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, obj):
        known = {f.name for f in fields(cls)}
        unknown = set(obj) - known
        if unknown:
            raise ValueError(f"unknown ChannelSpec keys: {sorted(unknown)}")
        return cls(**obj)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# Placeholder relaxation times; the molecule's measured values are configuration.
DEFAULT_CHANNEL = ChannelSpec(
    t1_q1=7.9, t2_q1=0.12, t1_q2=16.6, t2_q2=0.20, j_coupling=215.0, include_j=True
)


@dataclass(frozen=True)
class DynamicsPoint:
    time: float
    map_value: float
    discord: float
    fidelity_vs_ideal: float
    state: np.ndarray


def amplitude_damping_kraus(gamma):
    return [
        np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex),
        np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex),
    ]


def phase_damping_kraus(lam):
    """Dephasing that scales off-diagonal elements by ``lam``."""
    return [np.sqrt((1 + lam) / 2) * I2, np.sqrt((1 - lam) / 2) * Z]


def qubit_kraus(t1, t2, t):
    """Kraus operators of one qubit's relaxation over time ``t`` (damping, then dephasing)."""
    gamma = -np.expm1(-t / t1)
    lam = np.exp(-(1.0 / t2 - 0.5 / t1) * t)
    return [d @ k for d in phase_damping_kraus(lam) for k in amplitude_damping_kraus(gamma)]


def apply_kraus(rho, kraus, qubit):
    out = np.zeros_like(rho)
    for k in kraus:
        full = tensor(k, I2) if qubit == 1 else tensor(I2, k)
        out += full @ rho @ dag(full)
    return out


def evolve(rho, spec, t):
    """State after free evolution for ``t`` seconds."""
    if t < 0:
        raise ValueError(f"evolution time must be nonnegative, got {t}")
    rho = np.asarray(rho, dtype=complex)
    if spec.include_j:
        u = j_evolution(spec.j_coupling, t)
        rho = u @ rho @ dag(u)
    for q in (1, 2):
        rho = apply_kraus(rho, qubit_kraus(*spec.times(q), t), q)
    return (rho + dag(rho)) / 2


def sampling_schedule(j_hz):
    """Sampling times ``2n/J`` for the experiment's list of n."""
    return [2 * n / j_hz for n in SAMPLE_N]


def mv_crossing_time(spec, c=C_OPT, resolution=1e-4, initial=None, horizon=None):
    """First time at which the map value of the evolving state becomes nonnegative.

    The state (``sigma_ncc()`` by default) is sampled at ``2n/J`` for
    ``n = 0..50`` (or up to ``horizon`` seconds); the first sign change is
    then bisected to ``resolution``. Returns ``None`` if the map value stays
    negative over the horizon.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    rho0 = sigma_ncc() if initial is None else initial
    horizon = 100.0 / spec.j_coupling if horizon is None else horizon

    def mv(t):
        return map_value_direct(evolve(rho0, spec, t), c).map_value

    times = np.linspace(0.0, horizon, 51)
    prev = 0.0
    for t in times:
        if mv(t) >= 0:
            break
        prev = t
    else:
        return None
    if t == 0.0:
        return 0.0
    lo, hi = prev, t
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if mv(mid) >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def dynamics_sweep(spec, schedule, c=C_OPT, measured="B", initial=None, grid=61):
    """Map value, discord and fidelity of the evolving NCC state at each time."""
    schedule = list(schedule)
    if not schedule:
        raise ValueError("schedule is empty")
    if any(t < 0 for t in schedule) or any(b < a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be nonnegative and nondecreasing")
    ideal = sigma_ncc()
    rho0 = ideal if initial is None else np.asarray(initial, dtype=complex)
    points = []
    for t in schedule:
        rho = evolve(rho0, spec, t)
        points.append(DynamicsPoint(
            time=float(t),
            map_value=map_value_direct(rho, c).map_value,
            discord=discord(rho, measured, grid).discord,
            fidelity_vs_ideal=fidelity(rho, ideal),
            state=rho,
        ))
    return points
