"""
=======================================
Levinson's theorem and the ln T growth
=======================================

The coefficient of ``ln T`` in the high-temperature entropy is
``N - delta(0)/pi``. Levinson's theorem fixes ``delta(0)`` channel by
channel, which leaves only four possible coefficients.
"""

# %%
# The coefficient table
# ---------------------

import numpy as np

from scatentropy.levinson import (
    COEFFICIENT_TABLE,
    even_before_odd_fillings,
    channel_log_coefficient,
    measure_potential,
    verify_model,
)
from scatentropy.models import DeltaPotentialParams, PlasmaPointParams, make_spectral_model
from scatentropy.solver import square_well
from scatentropy.thermo import thermo_sweep

for (parity, critical), value in COEFFICIENT_TABLE.items():
    print(f"{parity:>4} channel, critical={critical!s:5}: {value:+.1f}")

totals = {
    channel_log_coefficient("even", ne, h == "even") + channel_log_coefficient("odd", no, h == "odd")
    for ne, no, h in even_before_odd_fillings(6)
}
print("totals reachable with alternating parity:", sorted(totals))

# %%
# Fitting the coefficient from entropy samples
# --------------------------------------------

for params in (DeltaPotentialParams(1.0), DeltaPotentialParams(-1.0, 2.0), PlasmaPointParams(1.0)):
    model = make_spectral_model(params)
    temps = np.geomspace(1e2, 1e4, 5) * model.frequency_scale
    rep = verify_model(model, thermo_sweep(model, temps, with_free_energy=False))
    print(f"{model.name:>24}: predicted {rep.predicted_log_coeff:+.3f}, fitted {rep.measured_log_coeff:+.5f}")

# %%
# Low-frequency phases of square wells
# ------------------------------------

for s in (0.5, 1.5, 2.5):
    m = measure_potential(square_well((s * np.pi / 2) ** 2, 2.0))
    print(
        f"s = {s:g}: N+ = {m.n_even}, N- = {m.n_odd}, "
        f"delta+(0)/pi = {m.delta_plus_zero / np.pi:+.4f}, delta-(0)/pi = {m.delta_minus_zero / np.pi:+.4f}, "
        f"critical = {m.critical}"
    )
