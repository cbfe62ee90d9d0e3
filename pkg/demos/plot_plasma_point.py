"""
=====================================
Entropy of a plasma point on a shell
=====================================

A field on the half line with a Dirichlet wall at the origin scatters off
a delta shell ``V = Omega delta(x - R)``. There are no bound states, the
phase shift is never positive, and so the entropy is negative at every
temperature. At high temperature it settles to ``-ln(1 + Omega R)/2``.
"""

# %%
# Phase shift
# -----------
#
# The phase vanishes at ``omega = 0`` and whenever ``omega R`` is a
# multiple of pi; a larger coupling pushes it further down.

import numpy as np

from scatentropy import PlasmaPointParams, make_spectral_model, plasma_phase_shift
from scatentropy.svgplot import line_plot
from scatentropy.thermo import entropy, plasma_entropy_limit, plasma_entropy_limit_integral

omega = np.linspace(0.0, 20.0, 2001)
curves = {f"Omega R = {v:g}": plasma_phase_shift(omega, PlasmaPointParams(v)) for v in (1.0, 10.0)}
for label, d in curves.items():
    print(f"{label:>14}: min delta = {d.min():+.4f} at omega R = {omega[d.argmin()]:.2f}")

# %%
# Entropy against temperature
# ---------------------------
#
# ``S(T)`` is negative on the whole range and approaches its limit like
# ``1/T``.

temps = np.logspace(-2, 2, 60)
S = {}
for v in (0.1, 1.0, 10.0):
    model = make_spectral_model(PlasmaPointParams(v))
    S[f"Omega R = {v:g}"] = np.array([entropy(model, T) for T in temps])

for label, s in S.items():
    print(f"{label:>14}: S(0.01) = {s[0]:+.3e}, S(100) = {s[-1]:+.5f}")

with open("plasma_entropy.svg", "w", encoding="ascii") as fh:
    fh.write(line_plot(temps, S, xlabel="T R", ylabel="S", title="plasma point", logx=True))

# %%
# High-temperature limit
# ----------------------
#
# The limit has a closed form and equals ``(1/pi) int delta(omega)/omega``.

for v in (0.1, 1.0, 10.0):
    p = PlasmaPointParams(v)
    model = make_spectral_model(p)
    closed = plasma_entropy_limit(p)
    print(
        f"Omega R = {v:>4g}: closed form {closed:+.10f}, "
        f"integral {plasma_entropy_limit_integral(p):+.10f}, "
        f"S(1e4) - limit = {entropy(model, 1e4) - closed:+.2e}"
    )
