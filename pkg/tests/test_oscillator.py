import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import roots_legendre

from covosc import (
    Convention,
    CoupledSystem,
    DomainError,
    Rapidity,
    coupling_rapidity,
    coupling_value,
    boost_value,
    from_normal_coords,
    ground_state_amplitude,
    hamiltonian_coupled,
    hamiltonian_normal,
    hermite_functions,
    mode_cutoff,
    default_mode_cutoff,
    potential_coupled,
    potential_normal,
    schmidt_weight,
    schmidt_weights,
    to_normal_coords,
)


def test_rapidity_conversions():
    eta = Rapidity.coupling(1.4)
    assert eta.to_boost().value == pytest.approx(0.7)
    assert eta.to_boost().convention is Convention.BOOST
    assert eta.to_coupling() is eta
    back = eta.to_boost().to_coupling()
    assert back.value == pytest.approx(1.4)
    # plain floats are interpreted in whichever convention the caller asks for
    assert coupling_value(1.4) == 1.4
    assert boost_value(1.4) == 1.4
    assert coupling_value(Rapidity.boost(0.7)) == pytest.approx(1.4)


def test_coupling_rapidity_known_value():
    # (spring + coupling)/(spring - coupling) = 8/2 = 4, so eta = log(2)
    system = CoupledSystem(mass=1.0, spring=5.0, coupling=3.0)
    assert coupling_rapidity(system).value == pytest.approx(math.log(2.0), rel=1e-15)
    assert coupling_rapidity(system).convention is Convention.COUPLING
    # sign follows the coupling
    flipped = CoupledSystem(mass=1.0, spring=5.0, coupling=-3.0)
    assert coupling_rapidity(flipped).value == pytest.approx(-math.log(2.0), rel=1e-15)
    uncoupled = CoupledSystem(mass=1.0, spring=5.0, coupling=0.0)
    assert coupling_rapidity(uncoupled).value == 0.0


@pytest.mark.parametrize(
    "mass,spring,coupling",
    [(0.0, 1.0, 0.5), (-1.0, 1.0, 0.5), (1.0, 0.0, 0.0), (1.0, 1.0, 1.0), (1.0, 1.0, -2.0)],
)
def test_coupled_system_rejects_bad_parameters(mass, spring, coupling):
    with pytest.raises(DomainError):
        CoupledSystem(mass, spring, coupling)


def test_normal_coords_round_trip():
    rng = np.random.default_rng(7)
    x1 = rng.normal(size=200)
    x2 = rng.normal(size=200)
    coords = to_normal_coords(x1, x2)
    y1, y2 = from_normal_coords(coords.relative, coords.center)
    np.testing.assert_allclose(y1, x1, atol=1e-12)
    np.testing.assert_allclose(y2, x2, atol=1e-12)
    # the rotation preserves the Euclidean norm
    np.testing.assert_allclose(
        coords.relative**2 + coords.center**2, x1**2 + x2**2, rtol=1e-12
    )


def test_potential_separates_in_normal_coords():
    system = CoupledSystem(mass=2.0, spring=5.0, coupling=3.0)
    rng = np.random.default_rng(11)
    x1 = rng.normal(size=50)
    x2 = rng.normal(size=50)
    rel, cen = to_normal_coords(x1, x2)
    np.testing.assert_allclose(
        potential_normal(system, rel, cen),
        potential_coupled(system, x1, x2),
        rtol=1e-12,
        atol=1e-12,
    )
    # mode stiffnesses are spring -/+ coupling
    np.testing.assert_allclose(
        potential_normal(system, 1.0, 0.0), 0.5 * (5.0 - 3.0), rtol=1e-12
    )
    np.testing.assert_allclose(
        potential_normal(system, 0.0, 1.0), 0.5 * (5.0 + 3.0), rtol=1e-12
    )


def test_hamiltonian_matches_across_coordinates():
    system = CoupledSystem(mass=1.5, spring=4.0, coupling=-2.5)
    rng = np.random.default_rng(13)
    x1, x2, p1, p2 = rng.normal(size=(4, 40))
    rel, cen = to_normal_coords(x1, x2)
    np.testing.assert_allclose(
        hamiltonian_normal(system, rel, cen, p1, p2),
        hamiltonian_coupled(system, x1, x2, p1, p2),
        rtol=1e-12,
        atol=1e-12,
    )


def test_ground_state_peak_and_isotropy():
    # peak value is 1/sqrt(pi) for every rapidity
    for eta in (0.0, 0.5, 2.0, -1.0):
        assert ground_state_amplitude(eta, 0.0, 0.0) == pytest.approx(
            1.0 / math.sqrt(math.pi), rel=1e-15
        )
    # eta = 0 is the isotropic product ground state
    x = np.linspace(-2, 2, 9)
    got = ground_state_amplitude(0.0, x[:, None], x[None, :])
    want = np.exp(-0.5 * (x[:, None] ** 2 + x[None, :] ** 2)) / math.sqrt(math.pi)
    np.testing.assert_allclose(got, want, rtol=1e-14)


def test_ground_state_expanded_exponent_form():
    # the rotated exponent equals
    # -cosh(eta)(x1^2+x2^2)/2 + sinh(eta) x1 x2 in particle coordinates
    rng = np.random.default_rng(3)
    x1 = rng.uniform(-2, 2, size=100)
    x2 = rng.uniform(-2, 2, size=100)
    for eta in (0.7, -1.3):
        expected = np.exp(
            -0.5 * math.cosh(eta) * (x1**2 + x2**2) + math.sinh(eta) * x1 * x2
        ) / math.sqrt(math.pi)
        np.testing.assert_allclose(
            ground_state_amplitude(eta, x1, x2), expected, rtol=1e-12
        )


@pytest.mark.parametrize("eta", [0.0, 1.0, 3.0])
def test_ground_state_normalization_by_quadrature(eta):
    # for fixed x1 the squared amplitude is a Gaussian in x2 centered at
    # x1 * tanh(eta) with width 1/sqrt(2 cosh eta); window the inner
    # integral around that peak so the adaptive rule cannot miss it
    sigma_inner = 1.0 / math.sqrt(2.0 * math.cosh(eta))
    outer_half = 8.0 * math.sqrt(math.cosh(eta) / 2.0) + 2.0

    def inner(x1):
        center = x1 * math.tanh(eta)
        val, err = quad(
            lambda x2: ground_state_amplitude(eta, x1, x2) ** 2,
            center - 14.0 * sigma_inner,
            center + 14.0 * sigma_inner,
            epsabs=1e-12,
            epsrel=1e-12,
            limit=200,
        )
        return val

    total, err = quad(
        inner, -outer_half, outer_half, epsabs=1e-10, epsrel=1e-10, limit=200
    )
    assert total == pytest.approx(1.0, abs=1e-8)


def test_schmidt_weights_square_sum_and_closed_form():
    for eta in (0.4, 1.0, 2.5, -1.5):
        amps = schmidt_weights(eta, 400)
        assert np.sum(amps**2) == pytest.approx(1.0, abs=1e-12)
        half = 0.5 * eta
        assert amps[0] == pytest.approx(1.0 / math.cosh(half), rel=1e-15)
        assert schmidt_weight(eta, 3) == pytest.approx(
            math.tanh(half) ** 3 / math.cosh(half), rel=1e-14
        )
    # negative eta alternates amplitude signs
    amps = schmidt_weights(-1.0, 5)
    assert amps[1] < 0 < amps[2]


def test_schmidt_reconstruction_matches_wavefunction():
    # the diagonal double sum over paired modes rebuilds the 2D Gaussian
    eta = 1.2
    amps = schmidt_weights(eta, 60)
    x = np.linspace(-4, 4, 33)
    hx = hermite_functions(60, x)
    rebuilt = np.einsum("k,ki,kj->ij", amps, hx, hx)
    direct = ground_state_amplitude(eta, x[:, None], x[None, :])
    np.testing.assert_allclose(rebuilt, direct, atol=1e-8)


def test_schmidt_weight_rejects_bad_mode_index():
    with pytest.raises(DomainError):
        schmidt_weight(1.0, -1)
    with pytest.raises(DomainError):
        schmidt_weights(1.0, -2)


def test_hermite_functions_orthonormal():
    # Gauss-Legendre over [-25, 25] resolves modes up to ~40 comfortably
    nodes, weights = roots_legendre(600)
    x = 25.0 * nodes
    w = 25.0 * weights
    h = hermite_functions(40, x)
    gram = np.einsum("i,ji,ki->jk", w, h, h)
    np.testing.assert_allclose(gram, np.eye(41), atol=1e-8)


def test_hermite_recurrence_stays_bounded():
    x = np.linspace(-30, 30, 1001)
    h = hermite_functions(300, x)
    assert np.all(np.isfinite(h))
    assert np.abs(h).max() < 1.0  # normalized functions stay below 1


def test_mode_cutoff_controls_tail():
    for eta in (0.5, 1.0, 2.0, 4.0):
        k = mode_cutoff(eta, 1e-12)
        ratio = math.tanh(0.5 * eta) ** 2
        assert ratio ** (k + 1) < 1e-12
        # the cutoff is within one mode of tight (unless the floor kicked in)
        if k > 8:
            assert ratio ** (k - 1) >= 1e-12
    assert mode_cutoff(0.0) == 8
    assert default_mode_cutoff(6.0) == 512  # clamped
    with pytest.raises(DomainError):
        mode_cutoff(1.0, tail_mass=0.0)
    with pytest.raises(DomainError):
        mode_cutoff(1.0, tail_mass=1.5)
