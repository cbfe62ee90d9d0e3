"""
=========================================
Entropy of a delta potential on the line
=========================================

For ``V = 2 alpha delta(x)`` the phase shift is ``-arctan(alpha/omega)``.
A repulsive potential has no bound states; an attractive one binds a
single even state with ``kappa = -alpha``, and the chemical potential must
then exceed ``kappa``. In both cases the entropy is positive and grows
like ``ln(T)/2``.
"""

# %%
# Phase shifts
# ------------

import numpy as np

from scatentropy import DeltaPotentialParams, delta_phase_shift, make_spectral_model
from scatentropy.thermo import delta_entropy_asymptote, entropy, high_temperature_form

for alpha in (-10.0, -1.0, 1.0, 10.0):
    p = DeltaPotentialParams(alpha, mu=-alpha + 1.0 if alpha < 0 else 0.0)
    print(f"alpha = {alpha:+5g}: delta(0) = {delta_phase_shift(0.0, p):+.4f}, delta(20) = {delta_phase_shift(20.0, p):+.4f}")

# %%
# Entropy and its logarithmic growth
# ----------------------------------
#
# The ``ln T`` coefficient is ``1/2`` in both cases. The constant depends
# on ``mu`` and on the bound state, so only the repulsive case with
# ``mu = 0`` follows ``(ln T + 1)/2`` exactly.

for alpha, mu in ((1.0, 0.0), (-1.0, 1.1), (-1.0, 2.0)):
    model = make_spectral_model(DeltaPotentialParams(alpha, mu))
    form = high_temperature_form(model)
    T = 1e3
    print(
        f"alpha = {alpha:+g}, mu = {mu:g}: S(1e3) = {entropy(model, T):.5f}, "
        f"{form.log_coefficient:.3f} ln T + {form.constant:.5f} = {form(T):.5f}, "
        f"(ln T + 1)/2 = {delta_entropy_asymptote(T):.5f}"
    )
