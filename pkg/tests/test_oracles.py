import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from trojan_unruh.constants import MUON, kepler_frequency
from trojan_unruh.errors import DomainError
from trojan_unruh.harmonic import Q_MIN, EquilibriumPoint, equilibrium_radius, field_from_q, shape_set
from trojan_unruh.oracles import (
    SpectrumProbe,
    WavepacketGaussian,
    emission_side,
    equilibrium_residual,
    gaussian_moments,
    linearized_mode_frequencies,
    linearized_system,
    spectrum_probe,
    stability_border,
)
from trojan_unruh.verify import dropped_radical_mode_ratios

OMEGA_12 = kepler_frequency(12, MUON)
HBAR = 1.054571817e-34


def test_linearized_matrix_entries():
    m = linearized_system(0.95).dynamics_matrix
    assert m.shape == (4, 4)
    assert m[2, 0] == 1 + 2 * 0.95 and m[3, 1] == 1 - 0.95
    assert m[2, 3] == 2.0 and m[3, 2] == -2.0


def test_linearized_circular_limit():
    modes = linearized_mode_frequencies(1.0)
    assert modes.plus == pytest.approx(1.0, rel=1e-14)
    assert modes.minus == pytest.approx(0.0, abs=1e-14)
    assert modes.z == pytest.approx(1.0)
    assert modes.stable


def test_linearized_best_confined():
    modes = linearized_mode_frequencies(0.9562)
    assert modes.plus == pytest.approx(0.94997, abs=5e-6)
    assert modes.minus == pytest.approx(0.37597, abs=5e-6)
    s = shape_set(0.9562)
    assert modes.plus == pytest.approx(s.omega_plus_ratio, rel=1e-10)
    assert modes.minus == pytest.approx(s.theta, rel=1e-10)


def test_linearized_dense_grid():
    worst = 0.0
    for q in np.linspace(Q_MIN + 1e-6, 1.0, 1000):
        modes, s = linearized_mode_frequencies(q), shape_set(q)
        worst = max(worst, abs(modes.plus / s.omega_plus_ratio - 1), abs(modes.z / s.omega_z_ratio - 1))
        if s.theta > 0:
            worst = max(worst, abs(modes.minus / s.theta - 1))
        assert modes.stable
    assert worst < 1e-10


def test_dropped_radical_detected():
    modes = linearized_mode_frequencies(0.9562)
    plus, minus = dropped_radical_mode_ratios(0.9562)
    assert max(abs(modes.plus / plus - 1), abs(modes.minus / minus - 1)) > 1e-3


@pytest.mark.parametrize("q", [0.8, 0.5, Q_MIN - 1e-6])
def test_instability_flagged(q):
    modes = linearized_mode_frequencies(q)
    assert not modes.stable
    assert modes.max_real_part > 0


def test_stability_border_bisection():
    assert stability_border() == pytest.approx(8 / 9, abs=1e-5)
    with pytest.raises(ValueError):
        stability_border(0.9, 0.95)


def test_isotropic_moments():
    pkt = WavepacketGaussian(A=1.0, B=1.0, C=0.3, D=1.0, x0=0.0, mass=MUON.mass(), omega=OMEGA_12)
    mom = gaussian_moments(pkt)
    base = HBAR / (2 * MUON.mass() * OMEGA_12)
    for v in (mom.var_x, mom.var_y, mom.var_z):
        assert v == pytest.approx(base, rel=1e-8)
    assert mom.norm == pytest.approx(1.0, abs=1e-8)


def test_normalization_constant():
    pkt = WavepacketGaussian(A=0.5, B=0.06, C=0.8, D=0.97, x0=1e-11, mass=MUON.mass(), omega=OMEGA_12)
    expected = (MUON.mass() * OMEGA_12 / (math.pi * HBAR)) ** 0.75 * (0.5 * 0.06 * 0.97) ** 0.25
    assert pkt.normalization == pytest.approx(expected, rel=1e-15)


def _packet(q, C=None):
    s = shape_set(q)
    x0 = equilibrium_radius(OMEGA_12, field_from_q(q, OMEGA_12, MUON), MUON).x0
    return s, WavepacketGaussian(A=s.A, B=s.B, C=s.C if C is None else C, D=s.D, x0=x0,
                                 mass=MUON.mass(), omega=OMEGA_12)


def test_best_confined_x_fluctuation():
    _, pkt = _packet(0.9562)
    assert gaussian_moments(pkt).var_x == pytest.approx(1.107e-22, rel=1e-3)


@pytest.mark.parametrize("q", np.linspace(Q_MIN + 1e-3, 1 - 1e-3, 50))
def test_moments_match_closed_forms(q):
    s, pkt = _packet(q)
    mom = gaussian_moments(pkt)
    base = HBAR / (2 * MUON.mass() * OMEGA_12)
    assert mom.var_x == pytest.approx(base / s.A, rel=1e-8)
    assert mom.var_y == pytest.approx(base / s.B, rel=1e-8)
    assert mom.var_z == pytest.approx(base / s.D, rel=1e-8)
    assert mom.norm == pytest.approx(1.0, abs=1e-8)


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=-5, max_value=5))
def test_moments_independent_of_phase_parameter(C):
    _, a = _packet(0.95)
    _, b = _packet(0.95, C=C)
    ma, mb = gaussian_moments(a), gaussian_moments(b)
    assert mb.var_x == pytest.approx(ma.var_x, rel=1e-12)
    assert mb.norm == pytest.approx(ma.norm, rel=1e-12)


def test_gaussian_rejects_nonpositive_width():
    with pytest.raises(DomainError):
        WavepacketGaussian(A=0.0, B=1.0, C=0.0, D=1.0, x0=0.0, mass=1.0, omega=1.0)


def test_equilibrium_residual_perturbed():
    q = 0.95
    pt = equilibrium_radius(OMEGA_12, field_from_q(q, OMEGA_12, MUON), MUON)
    assert equilibrium_residual(pt, MUON) < 1e-10
    moved = EquilibriumPoint(pt.x0 * 1.01, pt.q, pt.omega, pt.field_amplitude)
    residual = equilibrium_residual(moved, MUON)
    assert residual == pytest.approx((1 + 2 * q) * 0.01, rel=0.05)
    assert residual == pytest.approx(0.03, abs=3e-3)


def test_spectrum_probe_cubic_law():
    probe = SpectrumProbe(epsilon=1e-18)
    side = emission_side(probe, 1e17)
    assert side == -1
    for w in (0.02, 0.05, 0.1, 0.2):
        omega = w / probe.epsilon
        ratio = spectrum_probe(probe, side * 2 * omega) / spectrum_probe(probe, side * omega)
        assert ratio == pytest.approx(8 * math.exp(-w), rel=1e-2)


def test_spectrum_probe_absolute_shape():
    probe = SpectrumProbe(epsilon=1e-18, prefactor=1.0)
    omega = 0.1 / probe.epsilon
    # contour closed around the pole at tau = i eps
    assert spectrum_probe(probe, -omega) == pytest.approx(math.pi / 3 * omega**3 * math.exp(-0.1), rel=1e-8)


def test_spectrum_probe_absorption_side_vanishes():
    probe = SpectrumProbe(epsilon=1e-18)
    omega = 0.1 / probe.epsilon
    assert abs(spectrum_probe(probe, omega)) < 1e-6 * abs(spectrum_probe(probe, -omega))


def test_spectrum_probe_epsilon_factor():
    probe, doubled = SpectrumProbe(epsilon=1e-18), SpectrumProbe(epsilon=2e-18)
    omega = 0.1 / probe.epsilon
    ratio = spectrum_probe(doubled, -omega) / spectrum_probe(probe, -omega)
    assert ratio == pytest.approx(math.exp(-0.1), rel=1e-2)


def test_spectrum_probe_validation():
    with pytest.raises(DomainError):
        SpectrumProbe(epsilon=0.0)
    with pytest.raises(DomainError):
        spectrum_probe(SpectrumProbe(epsilon=1e-18), 0.0)
