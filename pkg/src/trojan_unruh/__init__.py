"""Trojan wavepackets in a circularly polarized drive: harmonic theory,
Unruh-Davies and spontaneous emission rates, and their numerical oracles."""

__version__ = "0.1.0"

from .constants import (
    CODATA2018,
    ELECTRON,
    MUON,
    PARTICLES,
    ParticleSpec,
    PhysicalConstants,
    UnitContext,
    get_particle,
    kepler_frequency,
    particle_units,
    wavelength_of,
)
from .errors import BorderSingularityError, DomainError
from .harmonic import (
    STABILITY_WINDOW,
    EquilibriumPoint,
    ShapeSet,
    equilibrium_radius,
    f_of_q,
    field_from_q,
    mode_frequencies,
    q_of_scaled_field,
    scaled_field_of_q,
    shape_set,
)
from .kinematics import (
    KinematicsReport,
    kinematics_report,
    orbital_acceleration,
    orbital_beta_gamma,
    revolutions_per_lifetime,
    unruh_temperature,
)
from .rates import (
    BEST_CONFINED_Q,
    Convention,
    DriveParameters,
    RateReport,
    dipole_matrix_elements,
    gamma_sp,
    gamma_sp_shape,
    gamma_ud,
    gamma_ud_shape,
    ratio_ud_sp,
    resonance_report,
)
