"""Nonclassicality witness map built from ``|00><00|`` and ``|1+><1+|``.

For any state ``rho`` the map value is

    MV(rho) = c - Tr(rho |00><00|) * Tr(rho |1+><1+|)

which is nonnegative on every properly classically correlated (PCC) state
when ``c >= C_OPT``. A negative map value certifies nonclassical correlation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import minimize

from .circuit import detection_readout
from .qmat import KET0, KET1, KET_PLUS, expect, ket2dm, tensor
from .states import PccSpec

C_OPT = 0.182138

PROJ_00 = ket2dm(tensor(KET0, KET0))
PROJ_1PLUS = ket2dm(tensor(KET1, KET_PLUS))


class OptimizationError(RuntimeError):
    """Raised when a search exhausts its budget without a stable optimum."""


@dataclass(frozen=True)
class WitnessReport:
    map_value: float
    factor_00: float
    factor_1plus: float
    polarizations: tuple[float, float, float]
    c_used: float
    ncc_detected: bool

    @property
    def product_term(self):
        return self.factor_00 * self.factor_1plus

    def to_json(self):
        out = asdict(self)
        z1, z2, z2p = self.polarizations
        out["polarizations"] = {"z1": z1, "z2": z2, "z2p": z2p}
        return out


def witness_map(rho, operators, c):
    """General product-form map ``c - prod_k Tr(rho A_k)``."""
    prod = 1.0
    for op in operators:
        prod *= expect(rho, op)
    return c - prod


def map_value_direct(rho, c=C_OPT):
    """Evaluate the map from the two projector expectations."""
    if c < 0:
        raise ValueError(f"c must be nonnegative, got {c}")
    f00 = expect(rho, PROJ_00)
    f1p = expect(rho, PROJ_1PLUS)
    mv = c - f00 * f1p
    return WitnessReport(
        map_value=mv,
        factor_00=f00,
        factor_1plus=f1p,
        polarizations=detection_readout(rho),
        c_used=c,
        ncc_detected=mv < 0,
    )


def map_value_polarization(z1, z2, z2prime, c=C_OPT):
    """Map value from the three detection-circuit polarizations."""
    return c - (1 + z1 + z2 + z2prime) * (1 - z1 + z2 - z2prime) / 16


# -- re-deriving the constant -------------------------------------------------


def _basis(theta, phi):
    """Unitary with columns ``cos t|0> + e^{i p} sin t|1>`` and its orthogonal partner."""
    c, s = np.cos(theta), np.sin(theta)
    e = np.exp(1j * phi)
    return np.array([[c, np.conj(e) * s], [e * s, -c]], dtype=complex)


def _simplex_point(a, b, c):
    sa, sb = np.sin(a) ** 2, np.sin(b) ** 2
    return np.array([
        np.cos(a) ** 2,
        sa * np.cos(b) ** 2,
        sa * sb * np.cos(c) ** 2,
        sa * sb * np.sin(c) ** 2,
    ])


def _pcc_product(x):
    """Product term of the PCC state described by 7 angles (closed form)."""
    ta, _, tb, pb, s1, s2, s3 = x
    p = _simplex_point(s1, s2, s3)
    ca2, sa2 = np.cos(ta) ** 2, np.sin(ta) ** 2
    cb2, sb2 = np.cos(tb) ** 2, np.sin(tb) ** 2
    proj_plus = np.sin(2 * tb) * np.cos(pb)
    plus0, plus1 = (1 + proj_plus) / 2, (1 - proj_plus) / 2
    # ordering of p matches (i, j) = 00, 01, 10, 11
    f00 = p[0] * ca2 * cb2 + p[1] * ca2 * sb2 + p[2] * sa2 * cb2 + p[3] * sa2 * sb2
    f1p = p[0] * sa2 * plus0 + p[1] * sa2 * plus1 + p[2] * ca2 * plus0 + p[3] * ca2 * plus1
    return f00 * f1p


def _spec_from_params(x):
    ta, pa, tb, pb, s1, s2, s3 = x
    probs = np.clip(_simplex_point(s1, s2, s3), 0.0, None)
    return PccSpec(_basis(ta, pa), _basis(tb, pb), (probs / probs.sum()).reshape(2, 2))


def optimize_c(seed=0, starts_per_round=64, max_rounds=6, tol=1e-9, computational_bases=False):
    """Largest product term over the PCC manifold.

    Multi-start Nelder-Mead over local basis angles and simplex angles. Rounds
    of ``starts_per_round`` random starts repeat until a round improves the
    best value by less than ``tol``.

    Returns
    -------
    c_opt : float
    argmax : PccSpec
        The maximizing PCC state, for inspection.

    Raises
    ------
    OptimizationError
        If ``max_rounds`` rounds pass without a stable best value.
    """
    rng = np.random.default_rng(seed)
    mask = np.ones(7)
    if computational_bases:
        mask[:4] = 0.0

    def objective(y):
        return -_pcc_product(y * mask)

    best_val, best_x = -np.inf, None
    for _ in range(max_rounds):
        prev = best_val
        for _ in range(starts_per_round):
            x0 = rng.uniform(0, np.pi, size=7)
            res = minimize(objective, x0, method="Nelder-Mead",
                           options={"xatol": 1e-9, "fatol": 1e-13, "maxiter": 4000})
            if -res.fun > best_val:
                best_val, best_x = -res.fun, res.x * mask
        if best_val - prev < tol:
            return float(best_val), _spec_from_params(best_x)
    raise OptimizationError(f"c_opt search unstable after {max_rounds} rounds (best {best_val:.9f})")
