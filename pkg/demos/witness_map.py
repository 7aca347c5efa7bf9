"""
Detecting nonclassical correlations with a single map value
===========================================================

A two-qubit state is classically correlated (PCC) when it is diagonal in a
product of local bases. The witness map

    MV(rho) = c - Tr(rho |00><00|) Tr(rho |1+><1+|)

stays nonnegative on every such state once c is large enough, so a negative
value certifies that ``rho`` is nonclassical.
"""

import numpy as np

from ncwitness import states
from ncwitness.circuit import detection_readout
from ncwitness.witness import C_OPT, map_value_direct, map_value_polarization

# The target state mixes |00> with |1+>. Its two local bases do not commute
# on qubit 2, so no product eigenbasis exists.
sigma = states.sigma_ncc()
print(np.round(sigma.real, 3))

report = map_value_direct(sigma)
print(f"product term   {report.product_term:.6f}")
print(f"map value      {report.map_value:.6f}  (c = {C_OPT})")
print(f"nonclassical   {report.ncc_detected}")

# In the lab the two overlaps are not measured directly. A controlled
# Hadamard followed by a CNOT maps them onto three polarizations.
z1, z2, z2p = detection_readout(sigma)
print(f"readout        z1={z1:+.3f} z2={z2:+.3f} z2'={z2p:+.3f}")
print(f"from readout   {map_value_polarization(z1, z2, z2p):.6f}")

# A few reference states for comparison.
for name, rho in [("|00>", states.basis_state("00")),
                  ("I/4", states.maximally_mixed()),
                  ("Bell", states.bell_state())]:
    print(f"{name:6s} MV = {map_value_direct(rho).map_value:+.6f}")

# The Bell state is entangled, yet this particular witness misses it: a
# witness is tailored to the state it is built for.
