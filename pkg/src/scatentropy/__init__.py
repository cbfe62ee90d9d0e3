"""Thermodynamics of quantum fields scattering off localized potentials.

The entropy and free energy of a one-dimensional field in the presence of a
potential follow from its bound states and scattering phase shift. This
package supplies closed-form phase shifts (plasma point on the half line,
delta potential on the full line), a transfer-matrix solver for
piecewise-constant potentials, adaptive quadrature for the thermal
integrals, and Levinson-theorem checks of the ``ln T`` growth.
"""
from .models import (
    DeltaPotentialParams,
    DomainError,
    PlasmaPointParams,
    SpectralModel,
    delta_phase_shift,
    make_spectral_model,
    plasma_phase_shift,
)
from .numerics import QuadratureError, QuadratureSpec, g_kernel
from .thermo import (
    entropy,
    entropy_high_T,
    free_energy,
    high_temperature_form,
    plasma_entropy_limit,
    thermo_sweep,
)
from .solver import (
    BoundStateSearchError,
    PiecewiseConstantPotential,
    bound_states_numeric,
    phase_shift,
    transmission,
)
from .levinson import levinson_predict_delta, verify_model

__version__ = "0.1.0"
