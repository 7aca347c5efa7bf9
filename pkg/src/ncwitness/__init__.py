"""Witnessing nonclassical correlations of two qubits.

Witness-map evaluation, quantum discord, relaxation dynamics and simulated
tomography for small dense density matrices.
"""

from .circuit import ch_gate, cnot_gate, detection_readout, prepare_ncc_product_operator
from .decoherence import ChannelSpec, dynamics_sweep, evolve, mv_crossing_time, sampling_schedule
from .discord import MeasurementBasis, discord, mutual_information
from .qmat import fidelity, partial_trace, tensor, von_neumann_entropy
from .states import bell_state, pcc_state, random_density, random_pcc, sigma_ncc
from .tomography import measure_all, reconstruct
from .witness import C_OPT, map_value_direct, map_value_polarization, optimize_c

__version__ = "0.1.0"
