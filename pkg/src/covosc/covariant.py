"""Light-cone boost kinematics and the boosted Gaussian wave function.

A longitudinal boost acts on the light-cone combinations ``u = (z + t)/sqrt(2)``
and ``v = (z - t)/sqrt(2)`` as a pure scaling by exp(+-eta), so the boosted
ground-state Gaussian is squeezed along the light-cone axes with exponents
exp(+-2 eta).  Rapidities here are in the *boost* convention; the coupling
picture of :mod:`covosc.oscillator` describes the same squeeze with twice the
rapidity value (see :class:`covosc.oscillator.Rapidity`).

Axis alignment used throughout: the coordinate pair (z, t) maps onto the
oscillator pair (x1, x2) with the minus combination ``v`` playing the role of
the relative coordinate, so ``spacetime_wavefunction(eta, z, t)`` equals
``ground_state_amplitude(2 * eta, z, t)`` pointwise.

The momentum-side light-cone combinations carry the opposite relative sign
(``q_u = (q0 - qz)/sqrt(2)``), which makes the momentum-space function equal
to the coordinate-space one under the relabeling ``z -> -qz, t -> q0``.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np
from scipy.integrate import quad

from .errors import DomainError, GridError, QuadratureError
from .oscillator import SQRT2, SQRT_PI, Rapidity, boost_value

__all__ = [
    "SpacetimePoint",
    "LightConePoint",
    "MomentumSplit",
    "ResidualFit",
    "lorentz_boost",
    "to_light_cone",
    "from_light_cone",
    "boost_light_cone",
    "hadron_variables",
    "quark_positions",
    "momentum_variables",
    "spacetime_wavefunction",
    "momentum_wavefunction",
    "marginal_width",
    "marginal_width_quadrature",
    "normalization_quadrature",
    "oscillator_equation_residual",
]

_AXES = ("longitudinal", "timelike")
_SPACES = ("spacetime", "momentum")


class SpacetimePoint(NamedTuple):
    """Longitudinal position and time (components may be arrays)."""

    z: float
    t: float


class LightConePoint(NamedTuple):
    """Light-cone coordinates u = (z + t)/sqrt(2), v = (z - t)/sqrt(2)."""

    u: float
    v: float


class MomentumSplit(NamedTuple):
    """Total and relative momenta of a pair, with the relative light-cone parts."""

    total: np.ndarray
    relative: np.ndarray
    relative_u: float
    relative_v: float


class ResidualFit(NamedTuple):
    """Least-squares eigenvalue estimate and worst residual of the fit."""

    eigenvalue: float
    max_residual: float


def lorentz_boost(point: SpacetimePoint, eta: "Rapidity | float") -> SpacetimePoint:
    """Boost (z, t) along the longitudinal axis by rapidity ``eta``."""
    value = boost_value(eta)
    ch = math.cosh(value)
    sh = math.sinh(value)
    z, t = point
    return SpacetimePoint(z * ch + t * sh, z * sh + t * ch)


def to_light_cone(point: SpacetimePoint) -> LightConePoint:
    z, t = point
    return LightConePoint((z + t) / SQRT2, (z - t) / SQRT2)


def from_light_cone(point: LightConePoint) -> SpacetimePoint:
    u, v = point
    return SpacetimePoint((u + v) / SQRT2, (u - v) / SQRT2)


def boost_light_cone(point: LightConePoint, eta: "Rapidity | float") -> LightConePoint:
    """Boosts scale the light-cone axes reciprocally: u -> e^eta u, v -> e^-eta v."""
    value = boost_value(eta)
    scale = math.exp(value)
    u, v = point
    return LightConePoint(u * scale, v / scale)


def hadron_variables(x_a, x_b) -> tuple:
    """Center and relative coordinates of a two-constituent system.

    Takes two 4-vectors (t, x, y, z) (or arrays of them along the last axis)
    and returns ``(center, relative)`` with center the midpoint and relative
    the separation scaled by 1/(2 sqrt(2)).
    """
    x_a = np.asarray(x_a, dtype=float)
    x_b = np.asarray(x_b, dtype=float)
    return (x_a + x_b) / 2.0, (x_a - x_b) / (2.0 * SQRT2)


def quark_positions(center, relative) -> tuple:
    """Inverse of :func:`hadron_variables`."""
    center = np.asarray(center, dtype=float)
    relative = np.asarray(relative, dtype=float)
    return center + SQRT2 * relative, center - SQRT2 * relative


def momentum_variables(p_a, p_b) -> MomentumSplit:
    """Total and relative momenta of a pair of 4-momenta (E, px, py, pz).

    The relative momentum is ``sqrt(2) * (p_a - p_b)``, and its light-cone
    parts use the conjugate sign convention ``q_u = (E - pz)/sqrt(2)``,
    ``q_v = (E + pz)/sqrt(2)`` (note the sign relative to the coordinate-side
    combinations).
    """
    p_a = np.asarray(p_a, dtype=float)
    p_b = np.asarray(p_b, dtype=float)
    total = p_a + p_b
    relative = SQRT2 * (p_a - p_b)
    rel_u = (relative[..., 0] - relative[..., 3]) / SQRT2
    rel_v = (relative[..., 0] + relative[..., 3]) / SQRT2
    return MomentumSplit(total, relative, rel_u, rel_v)


def spacetime_wavefunction(eta: "Rapidity | float", z, t):
    """Boosted ground-state wave function on the (z, t) plane.

    ``(1/pi)**0.5 * exp(-(exp(-2 eta) u**2 + exp(2 eta) v**2) / 2)`` with
    (u, v) the light-cone coordinates; at eta = 0 this is the isotropic
    Gaussian, and a boost squeezes it along the light-cone axes while
    preserving the area (and hence the normalization).
    """
    value = boost_value(eta)
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    u = (z + t) / SQRT2
    v = (z - t) / SQRT2
    out = (1.0 / SQRT_PI) * np.exp(
        -0.5 * (math.exp(-2.0 * value) * u * u + math.exp(2.0 * value) * v * v)
    )
    return float(out) if out.shape == () else out


def momentum_wavefunction(eta: "Rapidity | float", qz, q0):
    """Momentum-energy wave function, same squeezed Gaussian in (q_u, q_v).

    Because the momentum-side light-cone combinations carry the conjugate
    sign (``q_u = (q0 - qz)/sqrt(2)``), this equals
    ``spacetime_wavefunction(eta, -qz, q0)`` pointwise, and its longitudinal
    width grows with eta exactly like the coordinate-space one.
    """
    value = boost_value(eta)
    qz = np.asarray(qz, dtype=float)
    q0 = np.asarray(q0, dtype=float)
    q_u = (q0 - qz) / SQRT2
    q_v = (q0 + qz) / SQRT2
    out = (1.0 / SQRT_PI) * np.exp(
        -0.5 * (math.exp(-2.0 * value) * q_u * q_u + math.exp(2.0 * value) * q_v * q_v)
    )
    return float(out) if out.shape == () else out


def marginal_width(
    eta: "Rapidity | float",
    axis: str = "longitudinal",
    space: str = "spacetime",
) -> float:
    """Closed-form standard deviation of the squared-amplitude marginal.

    All four marginals (longitudinal/timelike in either picture) share the
    same value sqrt(cosh(2 eta) / 2): the 45-degree rotation mixes the wide
    and narrow light-cone directions equally.  Confirmed against
    :func:`marginal_width_quadrature`.
    """
    if axis not in _AXES:
        raise DomainError(f"axis must be one of {_AXES}, got {axis!r}")
    if space not in _SPACES:
        raise DomainError(f"space must be one of {_SPACES}, got {space!r}")
    value = boost_value(eta)
    return math.sqrt(0.5 * math.cosh(2.0 * value))


def _density_scalar_factory(value: float, space: str) -> Callable:
    weight_narrow = math.exp(-2.0 * value)
    weight_wide = math.exp(2.0 * value)

    if space == "spacetime":

        def dens(a: float, b: float) -> float:
            u = (a + b) / SQRT2
            v = (a - b) / SQRT2
            return math.exp(-(weight_narrow * u * u + weight_wide * v * v)) / math.pi

    else:

        def dens(a: float, b: float) -> float:
            q_u = (b - a) / SQRT2
            q_v = (b + a) / SQRT2
            return (
                math.exp(-(weight_narrow * q_u * q_u + weight_wide * q_v * q_v))
                / math.pi
            )

    return dens


def _nested_density_integral(
    value: float,
    space: str,
    weight: Callable,
    outer_half: float,
    abs_tol: float,
) -> float:
    # The squared amplitude at fixed outer coordinate is a Gaussian slice in
    # the inner coordinate with center +-tanh(2 eta) * outer and standard
    # deviation 1/sqrt(2 cosh(2 eta)); integrating over a +-12 sigma window
    # around that center keeps the adaptive rule from missing the ridge.
    dens = _density_scalar_factory(value, space)
    center_scale = math.tanh(2.0 * value)
    if space == "momentum":
        center_scale = -center_scale
    inner_half = 12.0 / math.sqrt(2.0 * math.cosh(2.0 * value))
    inner_eps = min(abs_tol / (16.0 * outer_half), 1e-13)

    def marginal(s: float) -> float:
        center = center_scale * s
        res = quad(
            lambda w: dens(s, w),
            center - inner_half,
            center + inner_half,
            epsabs=inner_eps,
            epsrel=1e-12,
            limit=200,
            full_output=1,
        )
        if len(res) > 3:
            raise QuadratureError(f"inner slice integral failed: {res[3]}")
        return weight(s) * res[0]

    res = quad(
        marginal,
        -outer_half,
        outer_half,
        epsabs=0.25 * abs_tol,
        epsrel=1e-12,
        limit=400,
        full_output=1,
    )
    if len(res) > 3:
        raise QuadratureError(f"outer marginal integral failed: {res[3]}")
    if res[1] > abs_tol:
        raise QuadratureError(
            f"marginal integral error estimate {res[1]:.3e} exceeds {abs_tol:.3e}"
        )
    return float(res[0])


def normalization_quadrature(
    eta: "Rapidity | float", space: str = "spacetime", abs_tol: float = 1e-10
) -> float:
    """Total squared-amplitude mass by nested adaptive quadrature.

    Should be 1 for every rapidity: the boost squeezes with unit Jacobian.
    """
    if space not in _SPACES:
        raise DomainError(f"space must be one of {_SPACES}, got {space!r}")
    value = boost_value(eta)
    sigma = math.sqrt(0.5 * math.cosh(2.0 * value))
    return _nested_density_integral(
        value, space, lambda s: 1.0, 8.0 * sigma + 2.0, abs_tol
    )


def marginal_width_quadrature(
    eta: "Rapidity | float",
    axis: str = "longitudinal",
    space: str = "spacetime",
    abs_tol: float = 1e-10,
) -> float:
    """Marginal standard deviation by nested adaptive quadrature.

    Independent numeric route to :func:`marginal_width`.  The two pictures
    are related by an axis relabeling, and both marginals of each picture
    coincide, so the ``axis``/``space`` choice only reorders the integrals.
    """
    if axis not in _AXES:
        raise DomainError(f"axis must be one of {_AXES}, got {axis!r}")
    if space not in _SPACES:
        raise DomainError(f"space must be one of {_SPACES}, got {space!r}")
    value = boost_value(eta)
    sigma = math.sqrt(0.5 * math.cosh(2.0 * value))
    outer_half = 9.0 * sigma + 4.0
    # the outer coordinate is the one whose marginal is requested; the
    # squared amplitude is symmetric under swapping its two arguments, so
    # "timelike" and "longitudinal" use the same nested form in each picture
    del axis
    norm = _nested_density_integral(value, space, lambda s: 1.0, outer_half, abs_tol)
    second = _nested_density_integral(
        value, space, lambda s: s * s, outer_half, abs_tol * max(1.0, sigma * sigma)
    )
    return math.sqrt(second / norm)


def oscillator_equation_residual(
    eta: "Rapidity | float",
    step: float = 1e-2,
    half_width: "float | None" = None,
    amplitude_floor: float = 1e-6,
    residual_tol: "float | None" = None,
) -> ResidualFit:
    """Check the boosted Gaussian against the invariant oscillator equation.

    The wave function should satisfy
    ``(1/2) * ((t**2 - z**2) - (d^2/dt^2 - d^2/dz^2)) psi = lambda * psi``
    restricted to the (z, t) plane; both the quadratic form and the wave
    operator are boost invariant, and the Gaussian is annihilated exactly
    (lambda = 0) for every rapidity.

    Second derivatives are taken with the centered 5-point (cross) stencil,
    so the residual shrinks at second order in ``step``.  ``lambda`` is fit
    by least squares over the grid points whose amplitude exceeds
    ``amplitude_floor``; raises :class:`GridError` when ``residual_tol`` is
    given and the fit residual stays above it.
    """
    value = boost_value(eta)
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step}")
    if half_width is None:
        half_width = 4.0 * math.exp(abs(value))
    if half_width < 4.0 * step:
        raise DomainError(
            f"half_width {half_width} too small for step {step}: no interior points"
        )
    n = int(round(2.0 * half_width / step)) + 1
    axis_points = -half_width + step * np.arange(n)
    psi = spacetime_wavefunction(value, axis_points[:, None], axis_points[None, :])
    inner = psi[1:-1, 1:-1]
    inv_h2 = 1.0 / (step * step)
    d2_t = (psi[1:-1, 2:] - 2.0 * inner + psi[1:-1, :-2]) * inv_h2
    d2_z = (psi[2:, 1:-1] - 2.0 * inner + psi[:-2, 1:-1]) * inv_h2
    squares = axis_points[1:-1] ** 2
    quad_form = squares[None, :] - squares[:, None]  # t**2 - z**2 on the interior
    applied = 0.5 * (quad_form * inner - (d2_t - d2_z))
    mask = np.abs(inner) > amplitude_floor
    if not mask.any():
        raise DomainError(
            f"amplitude floor {amplitude_floor} excludes every interior point"
        )
    amplitudes = inner[mask]
    fitted = float(np.dot(applied[mask], amplitudes) / np.dot(amplitudes, amplitudes))
    max_residual = float(np.max(np.abs(applied[mask] - fitted * amplitudes)))
    if residual_tol is not None and max_residual > residual_tol:
        raise GridError(
            f"grid step {step} too coarse: residual {max_residual:.3e} "
            f"exceeds requested tolerance {residual_tol:.3e}"
        )
    return ResidualFit(fitted, max_residual)
