"""Quantum discord of two-qubit states under projective measurements.

A measurement on one qubit is parameterized by angles ``(theta, phi)``
through the orthonormal pair

    v1 = cos(theta)|0> + e^{i phi} sin(theta)|1>
    v2 = e^{-i phi} sin(theta)|0> - cos(theta)|1>

Swapping the outcome labels maps ``(theta, phi)`` to ``(pi/2 - theta, phi + pi)``,
so ``theta`` in ``[0, pi/2]`` and ``phi`` in ``[0, 2 pi)`` cover every
measurement (twice). All entropies are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import I2, X, Y, Z, dag, partial_trace, tensor, von_neumann_entropy

ZERO_PROB = 1e-12

SWAP = np.eye(4, dtype=complex)[[0, 2, 1, 3]]


class ZeroProbabilityError(ValueError):
    """The requested measurement outcome has (numerically) zero probability."""


@dataclass(frozen=True)
class MeasurementBasis:
    theta: float
    phi: float

    def vectors(self):
        c, s = np.cos(self.theta), np.sin(self.theta)
        e = np.exp(1j * self.phi)
        return np.array([c, e * s]), np.array([np.conj(e) * s, -c])

    def projectors(self):
        return tuple(np.outer(v, v.conj()) for v in self.vectors())

    def bloch(self):
        """Bloch direction of the first outcome."""
        t2 = 2 * self.theta
        return np.array([np.sin(t2) * np.cos(self.phi), np.sin(t2) * np.sin(self.phi), np.cos(t2)])

    def canonical(self):
        """Same measurement with ``theta`` in ``[0, pi/2]`` and ``phi`` in ``[0, 2 pi)``."""
        nx, ny, nz = self.bloch()
        theta = 0.5 * np.arctan2(np.hypot(nx, ny), nz)
        phi = float(np.mod(np.arctan2(ny, nx), 2 * np.pi)) if np.hypot(nx, ny) > 1e-15 else 0.0
        if phi >= 2 * np.pi:  # mod of a tiny negative angle rounds up to 2 pi
            phi = 0.0
        return MeasurementBasis(float(theta), phi)


@dataclass(frozen=True)
class DiscordResult:
    discord: float
    optimal_basis: MeasurementBasis
    mutual_information: float
    classical_correlation: float
    conditional_entropy_min: float
    measured_subsystem: str

    def to_json(self):
        return {
            "discord": self.discord,
            "theta": self.optimal_basis.theta,
            "phi": self.optimal_basis.phi,
            "mutual_information": self.mutual_information,
            "classical_correlation": self.classical_correlation,
            "conditional_entropy_min": self.conditional_entropy_min,
            "measured_subsystem": self.measured_subsystem,
        }


def _check_measured(measured):
    if measured not in ("A", "B"):
        raise ValueError(f"measured must be 'A' or 'B', got {measured!r}")


def _unmeasured(measured):
    return "B" if measured == "A" else "A"


def mutual_information(rho):
    s_a = von_neumann_entropy(partial_trace(rho, "A"))
    s_b = von_neumann_entropy(partial_trace(rho, "B"))
    return s_a + s_b - von_neumann_entropy(rho)


def post_measurement_state(rho, basis, outcome, measured="A"):
    """Normalized state after a projective outcome on one qubit.

    Returns ``(state, prob)``; raises :class:`ZeroProbabilityError` when the
    outcome probability is below ``1e-12``.
    """
    _check_measured(measured)
    if outcome not in (1, 2):
        raise ValueError(f"outcome must be 1 or 2, got {outcome!r}")
    proj = basis.projectors()[outcome - 1]
    full = tensor(proj, I2) if measured == "A" else tensor(I2, proj)
    post = full @ np.asarray(rho, dtype=complex) @ full
    prob = float(np.real(np.trace(post)))
    if prob < ZERO_PROB:
        raise ZeroProbabilityError(f"outcome {outcome} has probability {prob:.3g}")
    return post / prob, prob


def conditional_entropy(rho, basis, measured="A"):
    """Outcome-weighted entropy of the unmeasured qubit after measuring ``measured``."""
    _check_measured(measured)
    total = 0.0
    for outcome in (1, 2):
        try:
            state, prob = post_measurement_state(rho, basis, outcome, measured)
        except ZeroProbabilityError:
            continue
        total += prob * von_neumann_entropy(partial_trace(state, _unmeasured(measured)))
    return total


# -- vectorized objective ------------------------------------------------------


def _bloch4(m):
    """``(Tr M, Tr MX, Tr MY, Tr MZ)`` for a stack of 2x2 matrices."""
    return np.stack(
        [np.real(np.einsum("...ij,ji->...", m, p)) for p in (I2, X, Y, Z)], axis=-1
    )


def _coefficients(rhos):
    """Per-state coefficient tensor ``(n, 4, 4)`` of the outcome-1 conditional operator.

    The unnormalized conditional operator of the unmeasured qubit for outcome 1 is
    ``cos^2 R00 + sin^2 R11 + sin(2 theta)/2 (cos phi S + sin phi Q)`` with
    ``R_ab`` the blocks of ``rho`` on the measured qubit, ``S = R01 + R10`` and
    ``Q = i (R01 - R10)``. Rows are those four operators as Bloch 4-vectors; the
    last row is the unmeasured marginal, needed for outcome 2.
    """
    r = rhos.reshape(-1, 2, 2, 2, 2)
    r00, r11 = r[:, 0, :, 0, :], r[:, 1, :, 1, :]
    r01, r10 = r[:, 0, :, 1, :], r[:, 1, :, 0, :]
    ops = np.stack([r00, r11, r01 + r10, 1j * (r01 - r10), r00 + r11], axis=1)
    return _bloch4(ops)


def _basis_functions(theta, phi):
    half = 0.5 * np.sin(2 * theta)
    return np.stack(
        [np.cos(theta) ** 2, np.sin(theta) ** 2, half * np.cos(phi), half * np.sin(phi)], axis=-2
    )


def _xlog2x(x):
    """Elementwise ``x log2 x`` with ``0 log 0 = 0``; negative inputs count as 0."""
    x = np.maximum(x, 0.0)
    return x * np.log2(np.maximum(x, 1e-300))


def _branch_entropy(t, x, y, z):
    """``p S(M / p)`` for an unnormalized 2x2 operator with Bloch components."""
    r = np.sqrt(x * x + y * y + z * z)
    ent = _xlog2x(t)
    ent -= _xlog2x(0.5 * (t + r))
    ent -= _xlog2x(0.5 * (t - r))
    ent[t < ZERO_PROB] = 0.0
    return ent


def _cond_entropy_points(coef, theta, phi):
    """Conditional entropy for every state and angle pair.

    ``coef`` is ``(n, 5, 4)``; ``theta`` and ``phi`` are ``(p,)`` (shared by all
    states) or ``(n, p)``. Returns ``(n, p)``.
    """
    f = _basis_functions(theta, phi)  # (4, p) or (n, 4, p)
    # (n, 4 components, p)
    v1 = np.matmul(np.swapaxes(coef[:, :4, :], 1, 2), f)
    marg = coef[:, 4, :, None]
    v2 = marg - v1
    return _branch_entropy(*np.moveaxis(v1, 1, 0)) + _branch_entropy(*np.moveaxis(v2, 1, 0))


def _grid(n):
    theta = np.linspace(0.0, np.pi / 2, n)
    phi = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    return tt.ravel(), pp.ravel(), theta[1] - theta[0], phi[1] - phi[0]


def _refine(coef, theta, phi, h_theta, h_phi, tol=1e-7, max_evals=500):
    """Batched compass search from starting angles ``(n, k)``."""
    best = _cond_entropy_points(coef, theta, phi)
    ht = np.full(theta.shape, h_theta)
    hp = np.full(theta.shape, h_phi)
    moves = np.array([[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [1, -1], [-1, 1], [-1, -1]])
    evals = 1
    while evals + len(moves) <= max_evals:
        active = ht > tol
        if not active.any():
            break
        ct = theta[..., None] + moves[:, 0] * ht[..., None]
        cp = phi[..., None] + moves[:, 1] * hp[..., None]
        n, k = theta.shape
        vals = _cond_entropy_points(coef, ct.reshape(n, -1), cp.reshape(n, -1)).reshape(n, k, -1)
        evals += len(moves)
        j = np.argmin(vals, axis=-1)
        cand = np.take_along_axis(vals, j[..., None], axis=-1)[..., 0]
        improve = active & (cand < best - 1e-15)
        theta = np.where(improve, np.take_along_axis(ct, j[..., None], axis=-1)[..., 0], theta)
        phi = np.where(improve, np.take_along_axis(cp, j[..., None], axis=-1)[..., 0], phi)
        best = np.where(improve, cand, best)
        shrink = active & ~improve
        ht = np.where(shrink, ht / 2, ht)
        hp = np.where(shrink, hp / 2, hp)
    return best, theta, phi


def min_conditional_entropy(rhos, measured="A", grid=61, n_starts=3):
    """Minimum conditional entropy for a stack of states.

    Coarse ``grid x grid`` search over ``(theta, phi)`` then compass-search
    refinement from the best ``n_starts`` grid points.

    Returns ``(values, theta, phi)`` arrays of length ``n``.
    """
    _check_measured(measured)
    rhos = np.asarray(rhos, dtype=complex).reshape(-1, 4, 4)
    if measured == "B":
        rhos = SWAP @ rhos @ SWAP
    coef = _coefficients(rhos)
    gt, gp, dt, dp = _grid(grid)
    # small sub-blocks keep the grid temporaries cache-resident
    vals = np.concatenate(
        [_cond_entropy_points(coef[i:i + 32], gt, gp) for i in range(0, len(coef), 32)]
    )
    k = min(n_starts, vals.shape[1])
    idx = np.argpartition(vals, k - 1, axis=1)[:, :k]
    # order starts by value, ties by grid index (theta-major, then phi)
    order = np.lexsort((idx, np.take_along_axis(vals, idx, axis=1)), axis=1)
    idx = np.take_along_axis(idx, order, axis=1)
    best, theta, phi = _refine(coef, gt[idx], gp[idx], dt / 2, dp / 2)
    j = np.argmin(best, axis=1)
    pick = np.arange(len(j))
    return best[pick, j], theta[pick, j], phi[pick, j]


def discord(rho, measured="A", grid=61):
    """Discord of ``rho`` with a projective measurement on ``measured``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"discord needs a 4x4 state, got shape {rho.shape}")
    cond, theta, phi = min_conditional_entropy(rho[None], measured, grid)
    cond = float(cond[0])
    s_m = von_neumann_entropy(partial_trace(rho, measured))
    s_u = von_neumann_entropy(partial_trace(rho, _unmeasured(measured)))
    s_ab = von_neumann_entropy(rho)
    mi = s_m + s_u - s_ab
    classical = s_u - cond
    return DiscordResult(
        discord=mi - classical,
        optimal_basis=MeasurementBasis(float(theta[0]), float(phi[0])).canonical(),
        mutual_information=mi,
        classical_correlation=classical,
        conditional_entropy_min=cond,
        measured_subsystem=measured,
    )


def discord_many(rhos, measured="A", grid=61, chunk=1024):
    """Discord values (bits) for a stack of states, processed in chunks."""
    rhos = np.asarray(rhos, dtype=complex).reshape(-1, 4, 4)
    out = np.empty(len(rhos))
    for start in range(0, len(rhos), chunk):
        block = rhos[start:start + chunk]
        cond, _, _ = min_conditional_entropy(block, measured, grid)
        ev = np.linalg.eigvalsh(block)
        s_ab = -np.sum(_xlog2x(ev), axis=-1)
        marg = np.einsum("nijik->njk", block.reshape(-1, 2, 2, 2, 2)) if measured == "B" \
            else np.einsum("nijkj->nik", block.reshape(-1, 2, 2, 2, 2))
        s_m = -np.sum(_xlog2x(np.linalg.eigvalsh(marg)), axis=-1)
        out[start:start + chunk] = s_m - s_ab + cond
    return out
