"""
Witness and discord under relaxation
====================================

Free evolution under T1 and T2 relaxation slowly turns sigma into a
classical state. The map value crosses zero at a finite time while discord
decays smoothly and never quite reaches zero.
"""

import numpy as np

from ncwitness.decoherence import ChannelSpec, dynamics_sweep, mv_crossing_time, sampling_schedule
from ncwitness.witness import C_OPT

# Pure dephasing on qubit 2 has a closed form: only the |1+> overlap decays,
# Tr(rho |1+><1+|) = (1 + exp(-t/T)) / 4, so MV = 0 at t = -T ln(8c - 1).
T = 0.12
spec = ChannelSpec.dephasing_only(T)
t_cross = mv_crossing_time(spec, resolution=1e-7)
print(f"crossing time {t_cross * 1e3:.3f} ms, closed form {-T * np.log(8 * C_OPT - 1) * 1e3:.3f} ms")

# A sweep at the sampling times 2n/J, where the coupling is a global phase.
times = sampling_schedule(spec.j_coupling)
print(f"{'t (ms)':>8} {'MV':>10} {'discord':>9} {'fidelity':>9}")
for p in dynamics_sweep(spec, times):
    print(f"{p.time * 1e3:8.2f} {p.map_value:+10.6f} {p.discord:9.6f} {p.fidelity_vs_ideal:9.6f}")
