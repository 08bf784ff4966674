"""Oracle and invariant checks behind the ``verify`` command."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import harmonic, oracles, rates
from .constants import CODATA2018, ELECTRON, MUON, ParticleSpec, kepler_frequency, particle_units
from .harmonic import Q_MIN

__all__ = ["CheckResult", "DEFAULT_THRESHOLDS", "closed_form_mode_ratios", "dropped_radical_mode_ratios", "run_checks"]

ModeRatios = Callable[[float], "tuple[float, float]"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    error: float
    threshold: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return math.isfinite(self.error) and self.error <= self.threshold

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "error": self.error,
            "threshold": self.threshold,
            "detail": self.detail,
        }


DEFAULT_THRESHOLDS = {
    "fine_structure_consistency": 1e-9,
    "unit_round_trip": 1e-14,
    "mode_frequency_oracle": 1e-10,
    "instability_flag": 0.0,
    "stability_border_bisection": 1e-5,
    "gaussian_moments": 1e-8,
    "gaussian_normalization": 1e-8,
    "moments_independent_of_C": 1e-12,
    "equilibrium_residual": 1e-10,
    "characteristic_identities": 1e-12,
    "theta_decreasing": 0.0,
    "scaled_field_round_trip": 1e-12,
    "gamma_ud_vanishes_at_zero_field": 0.0,
    "ratio_invariance": 1e-14,
    "convention_pi": 1e-12,
    "spectrum_cubic_law": 1e-2,
    "spectrum_absorption_side": 1e-6,
}


def closed_form_mode_ratios(q: float) -> tuple[float, float]:
    s = harmonic.shape_set(q)
    return s.omega_plus_ratio, s.theta


def dropped_radical_mode_ratios(q: float) -> tuple[float, float]:
    """omega_+-/omega with the inner square root missing; a deliberate fault."""
    d = 9.0 * q * q - 8.0 * q
    return math.sqrt((2.0 - q + d) / 2.0), math.sqrt(max(2.0 - q - d, 0.0) / 2.0)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def _window_grid(count: int, lo_offset: float = 1e-6) -> np.ndarray:
    return np.linspace(Q_MIN + lo_offset, 1.0, count)


def _fine_structure():
    err = _rel(CODATA2018.fine_structure_from_table(), CODATA2018.fine_structure)
    return err, "alpha vs e^2/(4 pi eps0 hbar c)"


def _unit_round_trip():
    worst = 0.0
    for particle in (ELECTRON, MUON):
        units = particle_units(particle)
        for kind in ("length", "time", "frequency", "field", "energy"):
            for x in (1e-30, 3.7e-11, 1.0, 6.02e23, 4.2e40):
                worst = max(worst, _rel(units.to_si(units.from_si(x, kind), kind), x))
    return worst, "to_si(from_si(x)) for 5 kinds x 2 particles"


def _mode_oracle(mode_ratios: ModeRatios):
    worst, where = 0.0, None
    for q in _window_grid(1000):
        num = oracles.linearized_mode_frequencies(q)
        plus, minus = mode_ratios(q)
        err = max(_rel(num.plus, plus), _rel(num.minus, minus), _rel(num.z, math.sqrt(q)))
        if err > worst:
            worst, where = err, q
    return worst, f"1000 q points, worst at q={where}"


def _instability_flag():
    below = np.linspace(0.5, Q_MIN - 1e-6, 200)
    above = _window_grid(200)
    wrong = sum(oracles.linearized_mode_frequencies(q).stable for q in below)
    wrong += sum(not oracles.linearized_mode_frequencies(q).stable for q in above)
    return float(wrong), "misclassified points out of 400"


def _border_bisection():
    border = oracles.stability_border()
    return abs(border - Q_MIN), f"bisected border {border!r}"


def _packet(q: float, particle: ParticleSpec = MUON, n: int = 12, C: float | None = None):
    s = harmonic.shape_set(q)
    omega = kepler_frequency(n, particle)
    eq = harmonic.equilibrium_radius(omega, harmonic.field_from_q(q, omega, particle), particle)
    pkt = oracles.WavepacketGaussian(
        A=s.A, B=s.B, C=s.C if C is None else C, D=s.D, x0=eq.x0, mass=particle.mass(), omega=omega
    )
    return s, pkt


def _moment_grid():
    return np.linspace(Q_MIN + 1e-3, 1.0 - 1e-3, 50)


def _gaussian_moments():
    worst_var, worst_norm = 0.0, 0.0
    for q in _moment_grid():
        s, pkt = _packet(q)
        mom = oracles.gaussian_moments(pkt)
        base = pkt.hbar / (2.0 * pkt.mass * pkt.omega)
        worst_var = max(
            worst_var, _rel(mom.var_x, base / s.A), _rel(mom.var_y, base / s.B), _rel(mom.var_z, base / s.D)
        )
        worst_norm = max(worst_norm, abs(mom.norm - 1.0))
    return worst_var, worst_norm


def _moments_c_free():
    worst = 0.0
    for q in _moment_grid()[::5]:
        _, with_c = _packet(q)
        _, without_c = _packet(q, C=0.0)
        a, b = oracles.gaussian_moments(with_c), oracles.gaussian_moments(without_c)
        worst = max(worst, _rel(a.var_x, b.var_x), _rel(a.var_y, b.var_y), _rel(a.norm, b.norm))
    return worst, "C = shape C vs C = 0 on 10 q points"


def _equilibrium():
    worst = 0.0
    for particle in (ELECTRON, MUON):
        for n in (1, 5, 12, 40):
            omega = kepler_frequency(n, particle)
            for q in _window_grid(40, 1e-4):
                field = harmonic.field_from_q(q, omega, particle)
                pt = harmonic.equilibrium_radius(omega, field, particle)
                worst = max(worst, oracles.equilibrium_residual(pt, particle), abs(pt.q - q))
    return worst, "residual and q round trip, 2 particles x 4 n x 40 q"


def _identities():
    worst = 0.0
    for q in _window_grid(2000, 1e-9):
        s = harmonic.shape_set(q)
        p2, m2 = s.omega_plus_ratio**2, s.theta**2
        worst = max(worst, _rel(p2 + m2, 2.0 - q), _rel(p2 * m2, (1 + 2 * q) * (1 - q)))
    return worst, "sum and product of squared mode ratios, 2000 q points"


def _theta_decreasing():
    thetas = [harmonic.shape_set(q).theta for q in _window_grid(2000, 1e-9)]
    bad = sum(b >= a for a, b in zip(thetas, thetas[1:]))
    return float(bad), "non-decreasing steps out of 1999"


def _scaled_field_round_trip():
    worst = 0.0
    for q in _window_grid(500, 1e-9):
        field = harmonic.scaled_field_of_q(q)
        back = harmonic.q_of_scaled_field(field)
        worst = max(worst, abs(harmonic.scaled_field_of_q(back) - field), abs(back - q))
    return worst, "500 q points"


def _gamma_ud_near_one():
    qs = np.linspace(0.999, 1.0, 201)
    values = [rates.gamma_ud_shape(q) for q in qs]
    bad = sum(b >= a for a, b in zip(values, values[1:])) + (values[-1] != 0.0)
    return float(bad), "monotone decrease to 0 on [0.999, 1]"


def _ratio_invariance():
    worst = 0.0
    for q in (0.9, rates.BEST_CONFINED_Q, 0.99):
        ref = rates.ratio_ud_sp(q)
        for particle in (ELECTRON, MUON):
            for n in (1, 7, 12):
                omega = kepler_frequency(n, particle)
                worst = max(worst, _rel(rates.gamma_ud(q, omega, particle) / rates.gamma_sp(q, omega, particle), ref))
    return worst, "gamma_ud/gamma_sp over particles and n vs ratio_ud_sp"


def _convention_pi():
    worst = 0.0
    omega = kepler_frequency(12, MUON)
    for q in (0.9, rates.BEST_CONFINED_Q, 0.99):
        printed = rates.gamma_ud(q, omega, MUON, rates.Convention.AS_PRINTED)
        calibrated = rates.gamma_ud(q, omega, MUON, rates.Convention.CALIBRATED)
        worst = max(worst, _rel(printed / calibrated, math.pi))
    return worst, "AS_PRINTED / CALIBRATED = pi"


def _spectrum():
    probe = oracles.SpectrumProbe(epsilon=1e-18)
    side = oracles.emission_side(probe, 1e17)
    worst = 0.0
    for w in np.geomspace(0.02, 0.2, 6):
        omega = w / probe.epsilon
        v1 = abs(oracles.spectrum_probe(probe, side * omega))
        v2 = abs(oracles.spectrum_probe(probe, side * 2 * omega))
        worst = max(worst, _rel(v2 / v1, 8.0 * math.exp(-w)))
    doubled = oracles.SpectrumProbe(epsilon=2 * probe.epsilon)
    omega = 0.1 / probe.epsilon
    v, vd = oracles.spectrum_probe(probe, side * omega), oracles.spectrum_probe(doubled, side * omega)
    worst = max(worst, _rel(vd / v, math.exp(-0.1)))
    leak = abs(oracles.spectrum_probe(probe, -side * omega)) / abs(v)
    return worst, leak, side


def run_checks(
    thresholds: dict[str, float] | None = None,
    tolerance: float | None = None,
    mode_ratios: ModeRatios = closed_form_mode_ratios,
) -> list[CheckResult]:
    """Run every check. ``tolerance`` replaces all thresholds; ``thresholds`` overrides by name."""
    limits = dict(DEFAULT_THRESHOLDS)
    if tolerance is not None:
        limits = {k: tolerance for k in limits}
    if thresholds:
        unknown = set(thresholds) - set(limits)
        if unknown:
            raise KeyError(f"unknown checks: {sorted(unknown)}")
        limits.update(thresholds)

    out: list[CheckResult] = []

    def add(name, error, detail=""):
        out.append(CheckResult(name, float(error), limits[name], detail))

    add("fine_structure_consistency", *_fine_structure())
    add("unit_round_trip", *_unit_round_trip())
    add("mode_frequency_oracle", *_mode_oracle(mode_ratios))
    add("instability_flag", *_instability_flag())
    add("stability_border_bisection", *_border_bisection())
    var_err, norm_err = _gaussian_moments()
    add("gaussian_moments", var_err, "quadrature vs hbar/(2 A,B,D m omega), 50 q points")
    add("gaussian_normalization", norm_err, "|norm - 1|, 50 q points")
    add("moments_independent_of_C", *_moments_c_free())
    add("equilibrium_residual", *_equilibrium())
    add("characteristic_identities", *_identities())
    add("theta_decreasing", *_theta_decreasing())
    add("scaled_field_round_trip", *_scaled_field_round_trip())
    add("gamma_ud_vanishes_at_zero_field", *_gamma_ud_near_one())
    add("ratio_invariance", *_ratio_invariance())
    add("convention_pi", *_convention_pi())
    cubic, leak, side = _spectrum()
    side_name = "negative" if side < 0 else "positive"
    add("spectrum_cubic_law", cubic, f"|value| ~ |Omega|^3 exp(-eps |Omega|); emission side is Omega {side_name}")
    add("spectrum_absorption_side", leak, "absorption-side value relative to emission side")
    return out
