"""Coupled-oscillator squeezing, reduced Gaussian states, and light-cone boosts.

A small numerical library (plus a command-line tool) for the quantitative
side of one story: coupling two identical oscillators squeezes their joint
ground state, tracing out one of them leaves a thermal-looking mixed state
with a closed-form entropy, and the very same squeeze mathematics describes
how a Lorentz boost deforms a Gaussian wave function along the light-cone
axes, down to the decoherence-style observables of a fast-moving bound pair.
"""

from .covariant import (
    LightConePoint,
    MomentumSplit,
    ResidualFit,
    SpacetimePoint,
    boost_light_cone,
    from_light_cone,
    hadron_variables,
    lorentz_boost,
    marginal_width,
    marginal_width_quadrature,
    momentum_variables,
    momentum_wavefunction,
    normalization_quadrature,
    oscillator_equation_residual,
    quark_positions,
    spacetime_wavefunction,
    to_light_cone,
)
from .errors import DomainError, GridError, QuadratureError
from .oscillator import (
    Convention,
    CoupledSystem,
    NormalCoords,
    Rapidity,
    boost_value,
    coupling_rapidity,
    coupling_value,
    default_mode_cutoff,
    from_normal_coords,
    ground_state_amplitude,
    hamiltonian_coupled,
    hamiltonian_normal,
    hermite_function,
    hermite_functions,
    mode_cutoff,
    potential_coupled,
    potential_normal,
    schmidt_weight,
    schmidt_weights,
    to_normal_coords,
)
from .parton import (
    PROTON_MASS_GEV,
    SqueezeEllipse,
    axis_scales,
    boost_entropy,
    ellipse_samples,
    interaction_time_ratio,
    rapidity_from_energy,
)
from .reduced import (
    ReducedState,
    ThermalMap,
    density_closed_form,
    density_quadrature,
    density_series,
    effective_temperature,
    entropy,
    entropy_from_weights,
    momentum_variance,
    position_variance,
    purity,
    purity_series,
    rapidity_from_temperature,
    trace_quadrature,
    uncertainty_product,
    uncertainty_product_series,
)

__version__ = "0.1.0"
