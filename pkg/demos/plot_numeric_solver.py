"""
=========================================
Transfer matrices for stepwise potentials
=========================================

The numeric solver handles any potential that is constant on intervals.
Thin boxes of fixed area reproduce the delta-potential phase with an error
proportional to the width, and square wells gain a bound state each time
``sqrt(V0) L / pi`` crosses an integer.
"""

# %%
# Thin boxes converge to the delta potential
# ------------------------------------------

import numpy as np

from scatentropy import DeltaPotentialParams, delta_phase_shift
from scatentropy.formats import parse_potential
from scatentropy.solver import bound_states_numeric, phase_shift, square_well, thin_box_delta, transmission

omega = np.geomspace(0.05, 20.0, 200)
for alpha in (1.0, -1.0):
    exact = delta_phase_shift(omega, DeltaPotentialParams(alpha, 2.0))
    errs = [np.abs(phase_shift(thin_box_delta(alpha, w), omega) - exact).max() for w in (1e-2, 1e-3, 1e-4)]
    print(f"alpha = {alpha:+g}: max phase error " + ", ".join(f"{e:.2e}" for e in errs))

# %%
# Counting bound states in a square well
# --------------------------------------

L = 2.0
for s in (0.5, 0.9, 1.1, 1.9, 2.1):
    states = bound_states_numeric(square_well((s * np.pi / L) ** 2, L))
    print(f"sqrt(V0) L / pi = {s:3.1f}: " + ", ".join(f"{b.kappa:.4f} ({b.parity})" for b in states))

# %%
# Reading a potential file
# ------------------------
#
# The same format is accepted by ``scatentropy solver --model FILE``.

pot = parse_potential(
    """
    geometry: full
    -1.0  -6.0
    -0.2   3.0   # a bump in the middle
     0.2  -6.0
     1.0
    """
)
t = transmission(pot, np.array([0.5, 2.0, 5.0]))
print("|t| =", np.round(np.abs(t), 6))
print("bound states:", bound_states_numeric(pot))
