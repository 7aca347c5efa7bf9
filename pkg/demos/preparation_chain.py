"""
Preparing the state with NMR pulses
===================================

Ensemble NMR works with the traceless deviation matrix, written in product
operators I1z, I2x, 2 I1z I2x and so on. Starting from thermal equilibrium,
a pulse on spin 1, a gradient that removes its transverse part, and a short
sequence on spin 2 produce a deviation proportional to sigma - I/4.
"""

import numpy as np

from ncwitness import states
from ncwitness.circuit import ncc_preparation_chain

for step, po in ncc_preparation_chain(j_hz=215.0):
    terms = ", ".join(f"{v:+.4f} {k}" for k, v in po.terms().items())
    print(f"{step:16s} {terms}")

final = ncc_preparation_chain(215.0)[-1][1].to_matrix()
target = states.sigma_ncc() - np.eye(4) / 4
mask = np.abs(target) > 1e-12
print("final / (sigma - I/4):", np.round((final[mask] / target[mask]).real, 6))
