"""Two identical coupled oscillators and their squeezed Gaussian ground state.

Everything is expressed in dimensionless natural units (hbar = 1, coordinates
measured in the characteristic ground-state length).  The coupling strength
enters through a single rapidity-like parameter: rotating to normal
coordinates turns the coupled quadratic potential into two independent modes
whose stiffnesses are scaled by exp(-eta) and exp(+eta).

The same rapidity parameter reappears in the light-cone kinematics of
:mod:`covosc.covariant`, but with half the magnitude for the same physical
squeeze.  :class:`Rapidity` keeps the two conventions explicitly distinct so
a value is never silently reused across that factor of two.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "Convention",
    "Rapidity",
    "CoupledSystem",
    "NormalCoords",
    "coupling_value",
    "boost_value",
    "coupling_rapidity",
    "to_normal_coords",
    "from_normal_coords",
    "potential_coupled",
    "potential_normal",
    "hamiltonian_coupled",
    "hamiltonian_normal",
    "ground_state_amplitude",
    "schmidt_weight",
    "schmidt_weights",
    "hermite_function",
    "hermite_functions",
    "mode_cutoff",
    "default_mode_cutoff",
]

SQRT_PI = math.sqrt(math.pi)
SQRT2 = math.sqrt(2.0)

#: Geometric tail mass the default mode cutoff is sized for.
DEFAULT_TAIL_MASS = 1e-12

#: Hard ceiling on the default cutoff; Hermite-series evaluation cost grows
#: linearly with the cutoff, so scans clamp here (explicit k_max overrides).
MAX_DEFAULT_MODES = 512


class Convention(enum.Enum):
    """Which squeeze parametrization a rapidity value is expressed in.

    COUPLING: exponent scale of the two-oscillator ground state, where the
        normal-mode Gaussian widths carry exp(+eta) and exp(-eta).
    BOOST: kinematic boost rapidity of the light-cone picture, where the
        wave-function exponents carry exp(+2 eta) and exp(-2 eta).

    The same physical squeeze satisfies eta_coupling = 2 * eta_boost.
    """

    COUPLING = "coupling"
    BOOST = "boost"


@dataclass(frozen=True)
class Rapidity:
    """A rapidity value tagged with its convention.

    Use :meth:`to_coupling` / :meth:`to_boost` to convert explicitly; there
    is deliberately no implicit coercion between conventions.
    """

    value: float
    convention: Convention = Convention.COUPLING

    @classmethod
    def coupling(cls, value: float) -> "Rapidity":
        return cls(float(value), Convention.COUPLING)

    @classmethod
    def boost(cls, value: float) -> "Rapidity":
        return cls(float(value), Convention.BOOST)

    def to_coupling(self) -> "Rapidity":
        if self.convention is Convention.COUPLING:
            return self
        return Rapidity(2.0 * self.value, Convention.COUPLING)

    def to_boost(self) -> "Rapidity":
        if self.convention is Convention.BOOST:
            return self
        return Rapidity(0.5 * self.value, Convention.BOOST)


def coupling_value(eta: "Rapidity | float") -> float:
    """Return ``eta`` as a plain float in the coupling convention.

    Plain floats are taken to already be coupling-convention values; a
    :class:`Rapidity` is converted explicitly.
    """
    if isinstance(eta, Rapidity):
        return eta.to_coupling().value
    return float(eta)


def boost_value(eta: "Rapidity | float") -> float:
    """Return ``eta`` as a plain float in the boost convention."""
    if isinstance(eta, Rapidity):
        return eta.to_boost().value
    return float(eta)


@dataclass(frozen=True)
class CoupledSystem:
    """Two identical oscillators of mass ``mass`` and spring constant
    ``spring``, coupled bilinearly with strength ``coupling``.

    The potential is stable only for ``abs(coupling) < spring``.
    """

    mass: float
    spring: float
    coupling: float

    def __post_init__(self) -> None:
        if self.mass <= 0.0:
            raise DomainError(f"mass must be positive, got {self.mass}")
        if self.spring <= 0.0:
            raise DomainError(f"spring constant must be positive, got {self.spring}")
        if abs(self.coupling) >= self.spring:
            raise DomainError(
                "unstable potential: |coupling| must be smaller than the "
                f"spring constant (got {self.coupling} vs {self.spring})"
            )


class NormalCoords(tuple):
    """Pair of normal coordinates (relative, center) from a 45-degree rotation."""

    __slots__ = ()

    def __new__(cls, relative, center):
        return tuple.__new__(cls, (relative, center))

    @property
    def relative(self):
        return self[0]

    @property
    def center(self):
        return self[1]


def coupling_rapidity(system: CoupledSystem) -> Rapidity:
    """Rapidity of the squeeze induced by the bilinear coupling.

    Equal to ``0.5 * log((spring + coupling) / (spring - coupling))``; its
    sign matches the sign of the coupling, and it vanishes for uncoupled
    oscillators.
    """
    ratio = (system.spring + system.coupling) / (system.spring - system.coupling)
    return Rapidity.coupling(0.5 * math.log(ratio))


def to_normal_coords(x1, x2) -> NormalCoords:
    """Rotate particle coordinates to (relative, center) normal coordinates."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    return NormalCoords((x1 - x2) / SQRT2, (x1 + x2) / SQRT2)


def from_normal_coords(relative, center) -> tuple:
    """Inverse of :func:`to_normal_coords`."""
    relative = np.asarray(relative, dtype=float)
    center = np.asarray(center, dtype=float)
    return (center + relative) / SQRT2, (center - relative) / SQRT2


def potential_coupled(system: CoupledSystem, x1, x2):
    """Potential energy in the original particle coordinates."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    return 0.5 * (
        system.spring * (x1 * x1 + x2 * x2) + 2.0 * system.coupling * x1 * x2
    )


def potential_normal(system: CoupledSystem, relative, center):
    """Potential energy in normal coordinates: two decoupled modes.

    The rotation diagonalizes the quadratic form into stiffnesses
    ``(spring - coupling)`` on the relative mode and ``(spring + coupling)``
    on the center mode; written as a squeeze, those are the geometric-mean
    stiffness ``sqrt(spring**2 - coupling**2)`` scaled by ``exp(-eta)`` and
    ``exp(+eta)`` with eta from :func:`coupling_rapidity`.
    """
    relative = np.asarray(relative, dtype=float)
    center = np.asarray(center, dtype=float)
    mean_stiffness = math.sqrt(system.spring**2 - system.coupling**2)
    eta = coupling_rapidity(system).value
    return 0.5 * mean_stiffness * (
        math.exp(-eta) * relative * relative + math.exp(eta) * center * center
    )


def hamiltonian_coupled(system: CoupledSystem, x1, x2, p1, p2):
    """Total energy in the original coordinates and momenta."""
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    kinetic = (p1 * p1 + p2 * p2) / (2.0 * system.mass)
    return kinetic + potential_coupled(system, x1, x2)


def hamiltonian_normal(system: CoupledSystem, relative, center, p1, p2):
    """Total energy in normal coordinates (kinetic part is rotation invariant)."""
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    kinetic = (p1 * p1 + p2 * p2) / (2.0 * system.mass)
    return kinetic + potential_normal(system, relative, center)


def ground_state_amplitude(eta: "Rapidity | float", x1, x2):
    """Squeezed two-oscillator ground-state wave function.

    Parameters
    ----------
    eta : Rapidity or float
        Squeeze rapidity (coupling convention for plain floats).
    x1, x2 : array_like
        Particle coordinates; broadcast against each other.

    Returns
    -------
    ndarray or float
        ``(1/pi)**0.5 * exp(-(exp(eta) * y1**2 + exp(-eta) * y2**2) / 2)``
        with (y1, y2) the (relative, center) normal coordinates.  For
        ``eta = 0`` this is the isotropic Gaussian ground state; positive
        eta narrows the relative direction and widens the center direction.
    """
    value = coupling_value(eta)
    y1, y2 = to_normal_coords(x1, x2)
    out = (1.0 / SQRT_PI) * np.exp(
        -0.5 * (math.exp(value) * y1 * y1 + math.exp(-value) * y2 * y2)
    )
    return out if out.shape else float(out)


def schmidt_weight(eta: "Rapidity | float", k: int) -> float:
    """Amplitude of the k-th product term in the mode expansion.

    The squeezed ground state expands over paired oscillator eigenmodes with
    amplitudes ``tanh(eta/2)**k / cosh(eta/2)``, whose squares sum to one.
    """
    if k < 0 or int(k) != k:
        raise DomainError(f"mode index must be a non-negative integer, got {k}")
    value = coupling_value(eta)
    half = 0.5 * value
    return float(math.tanh(half) ** int(k) / math.cosh(half))


def schmidt_weights(eta: "Rapidity | float", k_max: int) -> np.ndarray:
    """Vector of expansion amplitudes for modes 0..k_max inclusive."""
    if k_max < 0 or int(k_max) != k_max:
        raise DomainError(f"k_max must be a non-negative integer, got {k_max}")
    value = coupling_value(eta)
    half = 0.5 * value
    k = np.arange(int(k_max) + 1)
    return np.tanh(half) ** k / math.cosh(half)


def hermite_function(k: int, x):
    """Normalized oscillator eigenfunction of mode number ``k``.

    Evaluated with the three-term recurrence on the *normalized* functions
    (Gaussian factor included from the start), which stays bounded for large
    mode numbers where raw Hermite polynomials would overflow.
    """
    if k < 0 or int(k) != k:
        raise DomainError(f"mode index must be a non-negative integer, got {k}")
    return hermite_functions(int(k), x)[-1]


def hermite_functions(k_max: int, x) -> np.ndarray:
    """All normalized oscillator eigenfunctions for modes 0..k_max.

    Returns an array of shape ``(k_max + 1,) + shape(x)``.
    """
    if k_max < 0 or int(k_max) != k_max:
        raise DomainError(f"k_max must be a non-negative integer, got {k_max}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((int(k_max) + 1,) + x.shape)
    out[0] = math.pi**-0.25 * np.exp(-0.5 * x * x)
    if k_max >= 1:
        out[1] = SQRT2 * x * out[0]
    for k in range(1, int(k_max)):
        out[k + 1] = (
            math.sqrt(2.0 / (k + 1)) * x * out[k]
            - math.sqrt(k / (k + 1.0)) * out[k - 1]
        )
    return out


def mode_cutoff(
    eta: "Rapidity | float",
    tail_mass: float = DEFAULT_TAIL_MASS,
    max_modes: "int | None" = None,
) -> int:
    """Smallest mode count whose neglected weight tail is below ``tail_mass``.

    The mode weights form a geometric sequence with ratio ``tanh(eta/2)**2``,
    so the mass above mode K is exactly that ratio to the power K + 1.
    """
    if not 0.0 < tail_mass < 1.0:
        raise DomainError(f"tail_mass must lie in (0, 1), got {tail_mass}")
    value = abs(coupling_value(eta))
    ratio = math.tanh(0.5 * value) ** 2
    if ratio == 0.0:
        cutoff = 8
    else:
        cutoff = max(8, math.ceil(math.log(tail_mass) / math.log(ratio)))
    if max_modes is not None:
        cutoff = min(cutoff, int(max_modes))
    return cutoff


def default_mode_cutoff(eta: "Rapidity | float") -> int:
    """Default series order: tail mass below 1e-12, clamped at 512 modes."""
    return mode_cutoff(eta, DEFAULT_TAIL_MASS, MAX_DEFAULT_MODES)
