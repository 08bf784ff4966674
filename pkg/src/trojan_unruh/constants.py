"""Pinned physical constants, the particle registry and particle-scaled atomic units.

All constants are CODATA-2018. Every derived unit is computed from this single
table so that closed forms evaluated in SI and in particle atomic units agree to
rounding.

A particle of mass ``m = mass_ratio * m_e`` and charge ``z e`` bound to a unit
positive nucleus has Coulomb coupling ``kappa = z e^2 / (4 pi eps0)``. Its atomic
units are::

    length    hbar^2 / (m kappa)          (= a0 / mass_ratio for z = 1)
    energy    m kappa^2 / hbar^2
    time      hbar^3 / (m kappa^2)
    frequency 1 / time                    (angular, rad/s)
    field     energy / (z e length)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "ParticleSpec",
    "ELECTRON",
    "MUON",
    "PARTICLES",
    "get_particle",
    "UnitContext",
    "particle_units",
    "kepler_frequency",
    "wavelength_of",
    "check_level",
]


@dataclass(frozen=True)
class PhysicalConstants:
    elementary_charge: float = 1.602176634e-19  # C
    electron_mass: float = 9.1093837015e-31  # kg
    reduced_planck: float = 1.054571817e-34  # J s
    vacuum_permittivity: float = 8.8541878128e-12  # F/m
    light_speed: float = 299792458.0  # m/s
    boltzmann: float = 1.380649e-23  # J/K
    standard_gravity: float = 9.80665  # m/s^2
    fine_structure: float = 7.2973525693e-3

    def __post_init__(self):
        for name, value in self.as_dict().items():
            if not value > 0:
                raise ValueError(f"constant {name} must be positive, got {value!r}")

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}

    def fine_structure_from_table(self) -> float:
        """e^2 / (4 pi eps0 hbar c) from the other pinned entries."""
        e = self.elementary_charge
        return e * e / (4 * math.pi * self.vacuum_permittivity * self.reduced_planck * self.light_speed)

    @property
    def coulomb_constant(self) -> float:
        return 1.0 / (4 * math.pi * self.vacuum_permittivity)


CODATA2018 = PhysicalConstants()


@dataclass(frozen=True)
class ParticleSpec:
    """Identity of the orbiting particle.

    ``mean_lifetime`` is ``None`` for a stable particle.
    """

    name: str
    mass_ratio: float
    charge_magnitude: float = 1.0
    mean_lifetime: float | None = None

    def __post_init__(self):
        if not self.mass_ratio > 0:
            raise DomainError(f"mass_ratio must be positive, got {self.mass_ratio!r}")
        if not self.charge_magnitude > 0:
            raise DomainError(f"charge_magnitude must be positive, got {self.charge_magnitude!r}")
        if self.mean_lifetime is not None and not self.mean_lifetime > 0:
            raise DomainError(f"mean_lifetime must be positive or None, got {self.mean_lifetime!r}")

    @property
    def stable(self) -> bool:
        return self.mean_lifetime is None

    def mass(self, constants: PhysicalConstants = CODATA2018) -> float:
        return self.mass_ratio * constants.electron_mass

    def charge(self, constants: PhysicalConstants = CODATA2018) -> float:
        return self.charge_magnitude * constants.elementary_charge

    def coupling(self, constants: PhysicalConstants = CODATA2018) -> float:
        """Coulomb coupling z e^2/(4 pi eps0) to a unit nuclear charge, J m."""
        e = constants.elementary_charge
        return self.charge_magnitude * e * e * constants.coulomb_constant


ELECTRON = ParticleSpec("electron", 1.0)
MUON = ParticleSpec("muon", 206.7683, mean_lifetime=2.1970e-6)

PARTICLES: dict[str, ParticleSpec] = {p.name: p for p in (ELECTRON, MUON)}


def get_particle(name: str) -> ParticleSpec:
    try:
        return PARTICLES[name.lower()]
    except KeyError:
        known = ", ".join(sorted(PARTICLES))
        raise DomainError(f"unknown particle {name!r} (known: {known})") from None


_KINDS = ("length", "time", "frequency", "field", "energy")


@dataclass(frozen=True)
class UnitContext:
    """Atomic units scaled to one particle. Each ``*_unit`` is the SI size of 1 unit."""

    particle: ParticleSpec
    length_unit: float
    time_unit: float
    frequency_unit: float
    field_unit: float
    energy_unit: float
    constants: PhysicalConstants = field(default=CODATA2018, repr=False)

    def unit(self, kind: str) -> float:
        if kind not in _KINDS:
            raise ValueError(f"unknown quantity kind {kind!r}; expected one of {_KINDS}")
        return getattr(self, f"{kind}_unit")

    def to_si(self, value, kind: str):
        return value * self.unit(kind)

    def from_si(self, value, kind: str):
        return value / self.unit(kind)


def particle_units(particle: ParticleSpec, constants: PhysicalConstants = CODATA2018) -> UnitContext:
    hbar = constants.reduced_planck
    m = particle.mass(constants)
    kappa = particle.coupling(constants)
    length = hbar * hbar / (m * kappa)
    energy = m * kappa * kappa / (hbar * hbar)
    time = hbar / energy
    return UnitContext(
        particle=particle,
        length_unit=length,
        time_unit=time,
        frequency_unit=energy / hbar,
        field_unit=energy / (particle.charge(constants) * length),
        energy_unit=energy,
        constants=constants,
    )


def check_level(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"Rydberg number must be a positive integer, got {n!r}")
    return int(n)


def kepler_frequency(n: int, particle: ParticleSpec, constants: PhysicalConstants = CODATA2018) -> float:
    """Circular-orbit angular frequency of level n, rad/s (1/n^3 atomic units)."""
    n = check_level(n)
    return particle_units(particle, constants).frequency_unit / n**3


def wavelength_of(omega: float, constants: PhysicalConstants = CODATA2018) -> float:
    if not omega > 0:
        raise DomainError(f"angular frequency must be positive, got {omega!r}")
    return 2 * math.pi * constants.light_speed / omega
