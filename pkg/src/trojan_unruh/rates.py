"""Unruh-Davies and spontaneous emission rates of the Trojan wavepacket.

Both rates factor into an SI prefactor (z e)^2 omega^2 / (eps0 m c^3) times a
dimensionless shape that depends on q alone, so the ratio of the two is a pure
function of q. The relativistic factor gamma is set to 1 throughout.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import (
    CODATA2018,
    ParticleSpec,
    PhysicalConstants,
    kepler_frequency,
    particle_units,
    wavelength_of,
)
from .errors import BorderSingularityError, DomainError
from .harmonic import (
    Q_MAX,
    check_window,
    equilibrium_radius,
    field_from_q,
    shape_set,
)

__all__ = [
    "BEST_CONFINED_Q",
    "Convention",
    "DriveParameters",
    "RateReport",
    "gamma_ud_shape",
    "gamma_sp_shape",
    "rate_prefactor",
    "gamma_ud",
    "gamma_sp",
    "ratio_ud_sp",
    "dipole_matrix_elements",
    "drive_parameters",
    "resonance_report",
]

# best-confined packet; taken as given, not re-derived
BEST_CONFINED_Q = 0.9562


class Convention(enum.Enum):
    """Normalization of the Unruh-Davies rate.

    AS_PRINTED evaluates the closed form literally. CALIBRATED divides it by pi;
    the tabulated reference values (muon, n = 12, q = 0.9562) are in this
    normalization. The spontaneous rate is the same under both.
    """

    AS_PRINTED = "printed"
    CALIBRATED = "calibrated"

    @property
    def ud_scale(self) -> float:
        return 1.0 / math.pi if self is Convention.CALIBRATED else 1.0


def _interior(q: float, what: str) -> float:
    q = check_window(q)
    if q == Q_MAX:
        raise BorderSingularityError(f"{what} diverges at q = 1 (border singularity, B = 0)")
    return q


def gamma_ud_shape(q: float) -> float:
    """(1/3) sqrt(pi/2) alpha~^2 (lam^2/A^2 + 1/B^2) theta^3; 0 at q = 1."""
    s = shape_set(q)
    if s.q == Q_MAX:
        return 0.0
    return (
        math.sqrt(math.pi / 2.0) / 3.0
        * s.alpha_tilde_sq
        * (s.lam**2 / s.A**2 + 1.0 / s.B**2)
        * s.theta**3
    )


def gamma_sp_shape(q: float) -> float:
    """(1/12 pi) (lam/A - 1/B)^2 / (lam^2/A + 1/B) (1 + theta)^3."""
    _interior(q, "spontaneous emission rate")
    s = shape_set(q)
    return (
        (s.lam / s.A - 1.0 / s.B) ** 2
        / (s.lam**2 / s.A + 1.0 / s.B)
        * (1.0 + s.theta) ** 3
        / (12.0 * math.pi)
    )


def rate_prefactor(omega: float, particle: ParticleSpec, constants: PhysicalConstants = CODATA2018) -> float:
    """(z e)^2 omega^2 / (eps0 m c^3), s^-1."""
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    charge = particle.charge(constants)
    c = constants.light_speed
    return charge * charge * omega * omega / (constants.vacuum_permittivity * particle.mass(constants) * c**3)


def gamma_ud(
    q: float,
    omega: float,
    particle: ParticleSpec,
    convention: Convention = Convention.CALIBRATED,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Unruh-Davies photon emission rate, s^-1."""
    return rate_prefactor(omega, particle, constants) * gamma_ud_shape(q) * convention.ud_scale


def gamma_sp(
    q: float,
    omega: float,
    particle: ParticleSpec,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Spontaneous emission rate, s^-1."""
    return rate_prefactor(omega, particle, constants) * gamma_sp_shape(q)


def ratio_ud_sp(q: float, convention: Convention = Convention.CALIBRATED) -> float:
    return gamma_ud_shape(q) / gamma_sp_shape(q) * convention.ud_scale


def dipole_matrix_elements(
    q: float,
    omega: float,
    particle: ParticleSpec,
    constants: PhysicalConstants = CODATA2018,
) -> tuple[float, float]:
    """<psi1|x|psi0> and <psi1|y|psi0> in metres.

    x: alpha lam hbar/(2 A m omega), y: alpha hbar/(2 B m omega) with
    alpha = alpha~ sqrt(2 m omega/hbar).
    """
    _interior(q, "y dipole element")
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    s = shape_set(q)
    m = particle.mass(constants)
    hbar = constants.reduced_planck
    alpha = math.sqrt(s.alpha_tilde_sq) * math.sqrt(2.0 * m * omega / hbar)
    x_elem = alpha * s.lam * hbar / (2.0 * s.A * m * omega)
    y_elem = alpha * hbar / (2.0 * s.B * m * omega)
    return x_elem, y_elem


@dataclass(frozen=True)
class DriveParameters:
    """Laser drive that holds the packet at confinement q (SI; intensity in W/m^2)."""

    omega: float
    field_amplitude: float
    x0: float
    q: float
    scaled_field: float
    wavelength: float
    intensity: float

    @property
    def intensity_w_per_cm2(self) -> float:
        return self.intensity * 1e-4


def drive_parameters(
    q: float,
    omega: float,
    particle: ParticleSpec,
    constants: PhysicalConstants = CODATA2018,
) -> DriveParameters:
    field = field_from_q(q, omega, particle, constants)
    eq = equilibrium_radius(omega, field, particle, constants)
    units = particle_units(particle, constants)
    # rotating field of constant magnitude: both quadratures carry eps0 c E^2 / 2
    intensity = constants.vacuum_permittivity * constants.light_speed * field * field
    return DriveParameters(
        omega=omega,
        field_amplitude=field,
        x0=eq.x0,
        q=q,
        scaled_field=units.from_si(field, "field") * units.from_si(omega, "frequency") ** (-4.0 / 3.0),
        wavelength=wavelength_of(omega, constants),
        intensity=intensity,
    )


@dataclass(frozen=True)
class RateReport:
    """Rates at Kepler resonance. ``gamma_sp`` and ``ratio`` are None where they diverge (q = 1)."""

    particle: ParticleSpec
    n: int
    q: float
    omega: float
    gamma_ud: float
    gamma_sp: float | None
    ratio: float | None
    energy_gap: float
    convention: Convention
    drive: DriveParameters


def resonance_report(
    n: int,
    q: float,
    particle: ParticleSpec,
    convention: Convention = Convention.CALIBRATED,
    constants: PhysicalConstants = CODATA2018,
) -> RateReport:
    q = check_window(q)
    omega = kepler_frequency(n, particle, constants)
    s = shape_set(q)
    ud = gamma_ud(q, omega, particle, convention, constants)
    if q == Q_MAX:
        sp = ratio = None
    else:
        sp = gamma_sp(q, omega, particle, constants)
        ratio = ratio_ud_sp(q, convention)
    return RateReport(
        particle=particle,
        n=int(n),
        q=q,
        omega=omega,
        gamma_ud=ud,
        gamma_sp=sp,
        ratio=ratio,
        energy_gap=constants.reduced_planck * omega * s.theta,
        convention=convention,
        drive=drive_parameters(q, omega, particle, constants),
    )
