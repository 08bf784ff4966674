"""Orbital kinematics and the Unruh (Davies) temperature of the circular orbit."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CODATA2018, ParticleSpec, PhysicalConstants, check_level, kepler_frequency, particle_units
from .errors import DomainError

__all__ = [
    "KinematicsReport",
    "orbital_acceleration",
    "unruh_temperature",
    "orbital_beta_gamma",
    "revolutions_per_lifetime",
    "kinematics_report",
]


def orbital_acceleration(n: int, particle: ParticleSpec, constants: PhysicalConstants = CODATA2018) -> float:
    """Centripetal acceleration on the n-th circular Bohr orbit, m/s^2.

    Computed as a_1 / n^4 so the 1/n^4 law is exact in floating point.
    """
    n = check_level(n)
    a_p = particle_units(particle, constants).length_unit
    a1 = particle.coupling(constants) / (particle.mass(constants) * a_p * a_p)
    return a1 / n**4


def unruh_temperature(acceleration: float, constants: PhysicalConstants = CODATA2018) -> float:
    """hbar a / (2 pi k c), in kelvin."""
    if not acceleration >= 0:
        raise DomainError(f"acceleration must be nonnegative, got {acceleration!r}")
    return constants.reduced_planck * acceleration / (
        2 * math.pi * constants.boltzmann * constants.light_speed
    )


def orbital_beta_gamma(
    n: int,
    charge_magnitude: float = 1.0,
    constants: PhysicalConstants = CODATA2018,
) -> tuple[float, float]:
    """Orbital speed v/c = z alpha / n (mass independent) and the Lorentz factor."""
    n = check_level(n)
    beta = charge_magnitude * constants.fine_structure / n
    return beta, 1.0 / math.sqrt(1.0 - beta * beta)


def revolutions_per_lifetime(n: int, particle: ParticleSpec, constants: PhysicalConstants = CODATA2018) -> float:
    """Orbital periods in one mean lifetime; ``math.inf`` for a stable particle."""
    omega = kepler_frequency(n, particle, constants)
    if particle.stable:
        return math.inf
    return particle.mean_lifetime * omega / (2 * math.pi)


@dataclass(frozen=True)
class KinematicsReport:
    n: int
    particle: ParticleSpec
    acceleration: float
    acceleration_in_g: float
    beta: float
    gamma: float
    davies_temperature: float
    revolutions_per_lifetime: float


def kinematics_report(n: int, particle: ParticleSpec, constants: PhysicalConstants = CODATA2018) -> KinematicsReport:
    n = check_level(n)
    a = orbital_acceleration(n, particle, constants)
    beta, gamma = orbital_beta_gamma(n, particle.charge_magnitude, constants)
    t1 = unruh_temperature(orbital_acceleration(1, particle, constants), constants)
    return KinematicsReport(
        n=n,
        particle=particle,
        acceleration=a,
        acceleration_in_g=a / constants.standard_gravity,
        beta=beta,
        gamma=gamma,
        davies_temperature=t1 / n**4,
        revolutions_per_lifetime=revolutions_per_lifetime(n, particle, constants),
    )
