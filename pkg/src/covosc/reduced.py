"""Reduced single-oscillator state after tracing out the partner mode.

Tracing the squeezed two-oscillator ground state over one coordinate leaves a
mixed state that is diagonal in the oscillator eigenmodes with geometric
weights.  This module provides the mode-series and direct-quadrature routes
to that density matrix, its purity and entropy (closed form and weight sums),
and the map onto an effective temperature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import roots_legendre

from .errors import DomainError, QuadratureError
from .oscillator import (
    SQRT2,
    SQRT_PI,
    Rapidity,
    coupling_value,
    default_mode_cutoff,
    hermite_functions,
    schmidt_weights,
)

__all__ = [
    "ReducedState",
    "ThermalMap",
    "density_series",
    "density_quadrature",
    "density_closed_form",
    "trace_quadrature",
    "purity",
    "purity_series",
    "entropy",
    "entropy_from_weights",
    "effective_temperature",
    "rapidity_from_temperature",
    "position_variance",
    "momentum_variance",
    "uncertainty_product",
    "uncertainty_product_series",
]


@dataclass(frozen=True)
class ReducedState:
    """Mode-diagonal reduced state: geometric weights over eigenmodes 0..k_max.

    ``weights[k]`` is the population of eigenmode k,
    ``(1 - tanh(eta/2)**2) * tanh(eta/2)**(2k)``; the neglected tail mass is
    exactly ``tanh(eta/2)**(2 * (k_max + 1))``.
    """

    eta: float
    k_max: int
    weights: np.ndarray

    @classmethod
    def from_eta(
        cls, eta: "Rapidity | float", k_max: "int | None" = None
    ) -> "ReducedState":
        value = coupling_value(eta)
        if k_max is None:
            k_max = default_mode_cutoff(value)
        if k_max < 0 or int(k_max) != k_max:
            raise DomainError(f"k_max must be a non-negative integer, got {k_max}")
        amplitudes = schmidt_weights(value, int(k_max))
        return cls(value, int(k_max), amplitudes * amplitudes)

    def tail_mass(self) -> float:
        """Weight mass above k_max (exact geometric tail)."""
        return math.tanh(0.5 * abs(self.eta)) ** (2 * (self.k_max + 1))


def density_series(state: ReducedState, x, xp):
    """Density matrix element by the mode expansion.

    ``x`` and ``xp`` broadcast against each other; scalars in, float out.
    """
    x_in = np.asarray(x, dtype=float)
    xp_in = np.asarray(xp, dtype=float)
    scalar = x_in.ndim == 0 and xp_in.ndim == 0
    shape = np.broadcast_shapes(x_in.shape, xp_in.shape)
    hx = hermite_functions(state.k_max, np.broadcast_to(x_in, shape))
    hxp = hermite_functions(state.k_max, np.broadcast_to(xp_in, shape))
    out = np.einsum("k,k...,k...->...", state.weights, hx, hxp)
    return float(out[0]) if scalar else out


def _amplitude_scalar(value: float, a: float, b: float) -> float:
    # scalar fast path of oscillator.ground_state_amplitude (same formula)
    y1 = (a - b) / SQRT2
    y2 = (a + b) / SQRT2
    return (
        math.exp(-0.5 * (math.exp(value) * y1 * y1 + math.exp(-value) * y2 * y2))
        / SQRT_PI
    )


def density_quadrature(
    eta: "Rapidity | float", x: float, xp: float, abs_tol: float = 1e-10
) -> float:
    """Density matrix element by tracing the pair state with adaptive quadrature.

    Integrates the product of two ground-state amplitudes over the traced
    coordinate on [-L, L] with L = 6 * exp(|eta| / 2).  Raises
    :class:`QuadratureError` if the integrator signals trouble or its error
    estimate exceeds ``abs_tol``.
    """
    value = coupling_value(eta)
    x = float(x)
    xp = float(xp)
    half_width = 6.0 * math.exp(0.5 * abs(value))

    def integrand(s: float) -> float:
        return _amplitude_scalar(value, x, s) * _amplitude_scalar(value, xp, s)

    result = quad(
        integrand,
        -half_width,
        half_width,
        epsabs=min(0.01 * abs_tol, 1e-12),
        epsrel=1e-12,
        limit=200,
        full_output=1,
    )
    if len(result) > 3:
        raise QuadratureError(
            f"trace integral at (x, xp) = ({x}, {xp}) did not converge: {result[3]}"
        )
    val, err = result[0], result[1]
    if err > abs_tol:
        raise QuadratureError(
            f"trace integral at (x, xp) = ({x}, {xp}) has error estimate "
            f"{err:.3e}, above {abs_tol:.3e}"
        )
    return float(val)


def density_closed_form(eta: "Rapidity | float", x, xp):
    """Gaussian closed form of the reduced density matrix.

    Obtained once by completing the square in the trace integral; used as an
    independent cross-check of the series and quadrature routes.
    """
    value = coupling_value(eta)
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    ch = math.cosh(value)
    sh = math.sinh(value)
    out = np.exp(
        -0.5 * ch * (x * x + xp * xp) + sh * sh * (x + xp) ** 2 / (4.0 * ch)
    ) / math.sqrt(math.pi * ch)
    return float(out) if out.shape == () else out


@lru_cache(maxsize=8)
def _legendre_rule(n_nodes: int):
    nodes, weights = roots_legendre(n_nodes)
    return nodes, weights


def _diagonal_rule(state: ReducedState, n_nodes: int):
    # fixed Gauss-Legendre rule wide enough for the thermal diagonal
    sigma = math.sqrt(0.5 * math.cosh(state.eta))
    half_width = 8.0 * sigma + 6.0
    nodes, weights = _legendre_rule(n_nodes)
    return half_width * nodes, half_width * weights


def trace_quadrature(state: ReducedState, n_nodes: int = 800) -> float:
    """Numeric trace: Gauss-Legendre integral of the series diagonal."""
    x, w = _diagonal_rule(state, n_nodes)
    return float(np.sum(w * density_series(state, x, x)))


def purity(eta: "Rapidity | float") -> float:
    """Closed-form purity of the reduced state, 1 / cosh(eta)."""
    return 1.0 / math.cosh(coupling_value(eta))


def purity_series(state: ReducedState) -> float:
    """Purity as the sum of squared mode weights."""
    return float(np.sum(state.weights * state.weights))


def entropy(eta: "Rapidity | float") -> float:
    """Closed-form entanglement entropy of the reduced state.

    ``cosh(eta/2)**2 * log(cosh(eta/2)**2) - sinh(eta/2)**2 * log(sinh(eta/2)**2)``,
    even in eta, zero at eta = 0 and growing without bound.
    """
    half = 0.5 * abs(coupling_value(eta))
    ch2 = math.cosh(half) ** 2
    sh2 = math.sinh(half) ** 2
    if sh2 == 0.0:
        return 0.0
    return ch2 * math.log(ch2) - sh2 * math.log(sh2)


def entropy_from_weights(state: ReducedState) -> float:
    """Shannon sum -sum(w * log(w)) over the positive mode weights."""
    w = state.weights[state.weights > 0.0]
    return float(-np.sum(w * np.log(w)))


@dataclass(frozen=True)
class ThermalMap:
    """Effective temperature assignment for a given mode quantum ``omega``."""

    omega: float
    temperature: float


def effective_temperature(
    eta: "Rapidity | float", omega: float = 1.0
) -> ThermalMap:
    """Temperature at which the mode weights look thermal.

    Uses the convention ``tanh(|eta|/2) = exp(-omega / T)`` (natural units),
    so ``T = omega / (-log(tanh(|eta|/2)))``; the uncoupled state maps to the
    exact zero-temperature limit.  Negative eta is treated by |eta| since the
    weights are even in eta.
    """
    if omega <= 0.0:
        raise DomainError(f"omega must be positive, got {omega}")
    value = abs(coupling_value(eta))
    if value == 0.0:
        return ThermalMap(omega, 0.0)
    return ThermalMap(omega, omega / (-math.log(math.tanh(0.5 * value))))


def rapidity_from_temperature(thermal: ThermalMap) -> Rapidity:
    """Inverse of :func:`effective_temperature` (coupling convention)."""
    if thermal.omega <= 0.0:
        raise DomainError(f"omega must be positive, got {thermal.omega}")
    if thermal.temperature < 0.0:
        raise DomainError(
            f"temperature must be non-negative, got {thermal.temperature}"
        )
    if thermal.temperature == 0.0:
        return Rapidity.coupling(0.0)
    return Rapidity.coupling(
        2.0 * math.atanh(math.exp(-thermal.omega / thermal.temperature))
    )


def position_variance(state: ReducedState, n_nodes: int = 800) -> float:
    """Second position moment of the series diagonal, by quadrature."""
    x, w = _diagonal_rule(state, n_nodes)
    return float(np.sum(w * x * x * density_series(state, x, x)))


def momentum_variance(state: ReducedState) -> float:
    """Second momentum moment from the mode weights.

    Eigenmode k contributes k + 1/2 in natural units, so this is the
    weight-averaged mode energy.
    """
    k = np.arange(state.k_max + 1)
    return float(np.sum(state.weights * (k + 0.5)))


def uncertainty_product(eta: "Rapidity | float") -> float:
    """Closed-form position-momentum uncertainty product, cosh(eta) / 2.

    Confirmed against the quadrature/series moments (see
    :func:`uncertainty_product_series`); equals the minimum 1/2 only for the
    uncoupled state.
    """
    return 0.5 * math.cosh(coupling_value(eta))


def uncertainty_product_series(state: ReducedState) -> float:
    """Uncertainty product from the numeric moments (independent route)."""
    return math.sqrt(position_variance(state) * momentum_variance(state))
