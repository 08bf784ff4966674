import math

import pytest
from hypothesis import given, strategies as st

from trojan_unruh.constants import (
    CODATA2018,
    ELECTRON,
    MUON,
    ParticleSpec,
    PhysicalConstants,
    get_particle,
    kepler_frequency,
    particle_units,
    wavelength_of,
)
from trojan_unruh.errors import DomainError

# 40-digit mpmath evaluation of the unit algebra on the CODATA-2018 table
ELECTRON_LENGTH = 5.2917721025761124e-11
ELECTRON_FREQUENCY = 4.1341373410845059e16
ELECTRON_FIELD = 5.1422067601646451e11
MUON_LENGTH = 2.5592763023036473e-13
MUON_KEPLER_12 = 4.9468087383250199e15


def test_fine_structure_consistent_with_table():
    assert CODATA2018.fine_structure_from_table() == pytest.approx(CODATA2018.fine_structure, rel=1e-9)


def test_constants_positive():
    assert all(v > 0 for v in CODATA2018.as_dict().values())
    with pytest.raises(ValueError):
        PhysicalConstants(light_speed=-1.0)


def test_registry():
    assert get_particle("muon").mass_ratio == 206.7683
    assert get_particle("Muon").mean_lifetime == 2.1970e-6
    assert get_particle("electron").stable
    assert ELECTRON.mass_ratio == 1.0
    with pytest.raises(DomainError, match="unknown particle"):
        get_particle("tauon")


@pytest.mark.parametrize(
    "kwargs",
    [dict(mass_ratio=0.0), dict(mass_ratio=-2.0), dict(mass_ratio=1.0, charge_magnitude=0.0),
     dict(mass_ratio=1.0, mean_lifetime=0.0)],
)
def test_particle_validation(kwargs):
    with pytest.raises(DomainError):
        ParticleSpec("x", **kwargs)


@pytest.mark.parametrize(
    "particle, attr, expected",
    [
        (ELECTRON, "length_unit", ELECTRON_LENGTH),
        (ELECTRON, "frequency_unit", ELECTRON_FREQUENCY),
        (ELECTRON, "field_unit", ELECTRON_FIELD),
        (MUON, "length_unit", MUON_LENGTH),
    ],
)
def test_particle_units_values(particle, attr, expected):
    assert getattr(particle_units(particle), attr) == pytest.approx(expected, rel=1e-13)


def test_unit_values_match_rounded_examples():
    assert particle_units(ELECTRON).length_unit == pytest.approx(5.29177e-11, rel=1e-5)
    assert particle_units(MUON).length_unit == pytest.approx(2.55927e-13, rel=1e-5)
    assert particle_units(ELECTRON).frequency_unit == pytest.approx(4.13414e16, rel=1e-5)


def test_mass_scaling_of_units():
    e, mu = particle_units(ELECTRON), particle_units(MUON)
    assert mu.length_unit == pytest.approx(e.length_unit / MUON.mass_ratio, rel=1e-14)
    assert mu.frequency_unit == pytest.approx(e.frequency_unit * MUON.mass_ratio, rel=1e-14)
    assert mu.field_unit == pytest.approx(e.field_unit * MUON.mass_ratio**2, rel=1e-14)


def test_charge_scaling_of_length_unit():
    doubly = ParticleSpec("z2", 1.0, charge_magnitude=2.0)
    assert particle_units(doubly).length_unit == pytest.approx(ELECTRON_LENGTH / 2, rel=1e-14)


@given(
    st.floats(min_value=1e-40, max_value=1e40),
    st.sampled_from(["length", "time", "frequency", "field", "energy"]),
    st.sampled_from([ELECTRON, MUON]),
)
def test_unit_round_trip(x, kind, particle):
    units = particle_units(particle)
    assert units.to_si(units.from_si(x, kind), kind) == pytest.approx(x, rel=1e-14)


def test_unknown_kind():
    with pytest.raises(ValueError):
        particle_units(ELECTRON).to_si(1.0, "mass")


def test_kepler_frequency():
    assert kepler_frequency(12, MUON) == pytest.approx(MUON_KEPLER_12, rel=1e-13)
    assert kepler_frequency(12, MUON) == pytest.approx(4.9468e15, rel=1e-4)
    assert kepler_frequency(1, ELECTRON) == pytest.approx(ELECTRON_FREQUENCY, rel=1e-13)


@pytest.mark.parametrize("n", [2, 3, 12, 100])
def test_kepler_cube_law(n):
    assert kepler_frequency(n, MUON) / kepler_frequency(1, MUON) == pytest.approx(1 / n**3, rel=1e-15)


@pytest.mark.parametrize("n", [0, -1, 1.5, True])
def test_kepler_rejects_bad_level(n):
    with pytest.raises(DomainError):
        kepler_frequency(n, MUON)


def test_wavelength():
    assert wavelength_of(2 * math.pi * CODATA2018.light_speed) == pytest.approx(1.0, rel=1e-15)
    assert wavelength_of(ELECTRON_FREQUENCY) == pytest.approx(45.563e-9, rel=1e-4)
    assert wavelength_of(kepler_frequency(12, MUON)) == pytest.approx(380.782e-9, rel=1e-4)
    for bad in (0.0, -1.0):
        with pytest.raises(DomainError):
            wavelength_of(bad)


@pytest.mark.parametrize("n", [2, 5, 12])
def test_wavelength_cube_law(n):
    ratio = wavelength_of(kepler_frequency(n, MUON)) / wavelength_of(kepler_frequency(1, MUON))
    assert ratio == pytest.approx(n**3, rel=1e-14)
