"""
Quantum discord of the target state
===================================

Discord is the gap between the quantum mutual information and the
information that survives the best local projective measurement. It vanishes
exactly on states that are classical on the measured side.
"""

import numpy as np

from ncwitness import states
from ncwitness.discord import MeasurementBasis, conditional_entropy, discord

sigma = states.sigma_ncc()

# Measuring qubit 1 in the computational basis loses nothing: sigma is
# block diagonal there.
r_a = discord(sigma, "A")
print(f"D_A(sigma) = {r_a.discord:.2e}")

# Qubit 2 carries the non-orthogonal pair |0>, |+>. The best measurement is
# the one halfway between them.
r_b = discord(sigma, "B")
print(f"D_B(sigma) = {r_b.discord:.6f}")
print(f"best basis theta = {r_b.optimal_basis.theta:.6f}  (3 pi/8 = {3 * np.pi / 8:.6f})")

# The landscape of conditional entropy over the polar angle.
for theta in np.linspace(0, np.pi / 2, 9):
    h = conditional_entropy(sigma, MeasurementBasis(theta, 0.0), measured="B")
    print(f"theta={theta:5.3f}  S(A|B_meas)={h:.4f}")

print(f"Bell state: {discord(states.bell_state()).discord:.6f}")
