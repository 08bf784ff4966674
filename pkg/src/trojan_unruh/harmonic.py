"""Harmonic theory of the Trojan wavepacket as a function of the confinement parameter q.

q = kappa / (m omega^2 x0^3) compares the Coulomb pull at the packet centre with the
centrifugal term of the rotating frame. The linearized motion is marginally stable
for 8/9 < q < 1; q = 1 is the field-free circular orbit.

Sign convention: the drive field is a magnitude, z e E = (1 - q) m omega^2 x0, so that
q <= 1 for every physical field and the scaled field (1 - q)/q^(1/3) is nonnegative.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from scipy.optimize import brentq

from .constants import CODATA2018, ParticleSpec, PhysicalConstants, particle_units
from .errors import BorderSingularityError, DomainError

__all__ = [
    "Q_MIN",
    "Q_MAX",
    "StabilityWindow",
    "STABILITY_WINDOW",
    "ShapeSet",
    "EquilibriumPoint",
    "check_window",
    "f_of_q",
    "confinement",
    "shape_set",
    "mode_frequencies",
    "scaled_field_of_q",
    "q_of_scaled_field",
    "equilibrium_radius",
    "field_from_q",
]

Q_MIN = 8.0 / 9.0
Q_MAX = 1.0

# smallest relative tolerance brentq accepts
_RTOL = 4 * sys.float_info.epsilon


@dataclass(frozen=True)
class StabilityWindow:
    q_min: float = Q_MIN
    q_max: float = Q_MAX
    scaled_field_max: float = (1.0 / 9.0) / (8.0 / 9.0) ** (1.0 / 3.0)

    def describe(self) -> str:
        return (
            f"stability window is {self.q_min:.6f} < q <= {self.q_max:g} "
            f"(0 <= scaled field < {self.scaled_field_max:.6f})"
        )


STABILITY_WINDOW = StabilityWindow()


def check_window(q: float) -> float:
    """Validate 8/9 < q <= 1. Exactly 8/9 is a border singularity."""
    q = float(q)
    if not math.isfinite(q):
        raise DomainError(f"q must be finite, got {q!r}; {STABILITY_WINDOW.describe()}")
    if q > Q_MAX:
        raise DomainError(f"q = {q!r} is above 1; {STABILITY_WINDOW.describe()}")
    if q == Q_MIN:
        raise BorderSingularityError(
            f"q = 8/9 is the stability border, where A = B = 0; {STABILITY_WINDOW.describe()}"
        )
    if q < Q_MIN:
        raise DomainError(f"q = {q!r} is below stability border 8/9; {STABILITY_WINDOW.describe()}")
    return q


def f_of_q(q: float) -> float:
    """f(q) = 2 + q - 2 sqrt((1 - q)(1 + 2q)), defined on 0 <= q <= 1."""
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"f(q) needs 0 <= q <= 1, got {q!r}")
    return 2.0 + q - 2.0 * math.sqrt((1.0 - q) * (1.0 + 2.0 * q))


def _nine_q_minus_eight(q: float) -> float:
    # exact in floating point for q in [2/3, 4/3]: both subtractions are Sterbenz-exact
    return (8.0 * q - 8.0) + q


def confinement(q: float) -> float:
    """4 f(q) - 9 q^2, rationalized so it stays accurate near q = 8/9.

    Equals 9 q^3 (9q - 8) / (8 + 4q - 9q^2 + 8 sqrt((1 - q)(1 + 2q))).
    """
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"4f(q) - 9q^2 needs 0 <= q <= 1, got {q!r}")
    s = math.sqrt((1.0 - q) * (1.0 + 2.0 * q))
    return 9.0 * q**3 * _nine_q_minus_eight(q) / (8.0 + 4.0 * q - 9.0 * q * q + 8.0 * s)


@dataclass(frozen=True)
class ShapeSet:
    """Dimensionless harmonic-theory quantities at one q.

    A, B, C, D are the Gaussian width/phase parameters of the ground packet,
    theta = omega_-/omega, lam = (1 + C)/(A + theta) and
    alpha_tilde_sq = 1/(lam^2/A + 1/B) (0 at q = 1).
    """

    q: float
    f: float
    A: float
    B: float
    C: float
    D: float
    theta: float
    omega_plus_ratio: float
    omega_z_ratio: float
    lam: float
    alpha_tilde_sq: float


def _mode_ratios(q: float) -> tuple[float, float]:
    # theta^2 rationalized: (2 - q - r)/2 = 2(1+2q)(1-q)/(2 - q + r)
    r = math.sqrt(max(q * _nine_q_minus_eight(q), 0.0))
    plus_sq = (2.0 - q + r) / 2.0
    minus_sq = (1.0 + 2.0 * q) * (1.0 - q) / plus_sq
    return math.sqrt(plus_sq), math.sqrt(minus_sq)


def shape_set(q: float) -> ShapeSet:
    q = check_window(q)
    f = f_of_q(q)
    g = confinement(q)
    A = math.sqrt((1.0 + 2.0 * q) * g) / (3.0 * q)
    B = math.sqrt((1.0 - q) * g) / (3.0 * q)
    C = f / (3.0 * q)
    omega_plus_ratio, theta = _mode_ratios(q)
    lam = (1.0 + C) / (A + theta)
    # 1/(lam^2/A + 1/B) written without 1/B so B = 0 gives the limit 0
    alpha_tilde_sq = A * B / (lam * lam * B + A)
    return ShapeSet(
        q=q,
        f=f,
        A=A,
        B=B,
        C=C,
        D=math.sqrt(q),
        theta=theta,
        omega_plus_ratio=omega_plus_ratio,
        omega_z_ratio=math.sqrt(q),
        lam=lam,
        alpha_tilde_sq=alpha_tilde_sq,
    )


def mode_frequencies(q: float, omega: float) -> tuple[float, float, float]:
    """(omega_+, omega_-, omega_z) in the units of ``omega``."""
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    s = shape_set(q)
    return omega * s.omega_plus_ratio, omega * s.theta, omega * s.omega_z_ratio


def scaled_field_of_q(q: float) -> float:
    """Scaled field E omega^(-4/3) = (1 - q)/q^(1/3) in particle atomic units."""
    if not 0.0 < q <= 1.0:
        raise DomainError(f"scaled field needs 0 < q <= 1, got {q!r}")
    return (1.0 - q) / q ** (1.0 / 3.0)


def q_of_scaled_field(scaled_field: float) -> float:
    """Inverse of :func:`scaled_field_of_q` on the Trojan branch 8/9 < q <= 1."""
    fmax = STABILITY_WINDOW.scaled_field_max
    if not 0.0 <= scaled_field < fmax:
        raise DomainError(
            f"scaled field {scaled_field!r} outside stability window; {STABILITY_WINDOW.describe()}"
        )
    if scaled_field == 0.0:
        return 1.0
    return brentq(
        lambda q: scaled_field_of_q(q) - scaled_field,
        Q_MIN,
        Q_MAX,
        xtol=1e-15,
        rtol=_RTOL,
        maxiter=200,
    )


@dataclass(frozen=True)
class EquilibriumPoint:
    """Packet centre in the rotating frame (SI units)."""

    x0: float
    q: float
    omega: float
    field_amplitude: float


def equilibrium_radius(
    omega: float,
    field_amplitude: float,
    particle: ParticleSpec,
    constants: PhysicalConstants = CODATA2018,
) -> EquilibriumPoint:
    """Solve kappa/x0^2 + z e E = m omega^2 x0 for the Trojan root.

    In particle atomic units the residual w^2 x - 1/x^2 - E is strictly increasing
    in x, so the root is bracketed by the zero-field radius (q = 1) and the
    border radius (q = 8/9).
    """
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    if not field_amplitude >= 0:
        raise DomainError(f"field amplitude must be nonnegative, got {field_amplitude!r}")
    units = particle_units(particle, constants)
    w = units.from_si(omega, "frequency")
    e_field = units.from_si(field_amplitude, "field")

    x_zero = w ** (-2.0 / 3.0)
    if e_field == 0.0:
        return EquilibriumPoint(units.to_si(x_zero, "length"), 1.0, omega, field_amplitude)

    x_border = (9.0 / 8.0) ** (1.0 / 3.0) * x_zero

    def residual(x):
        return w * w * x - 1.0 / (x * x) - e_field

    if residual(x_border) <= 0.0:
        raise DomainError(
            f"field {field_amplitude:.6g} V/m too strong for omega = {omega:.6g} rad/s: "
            f"outside stability window; {STABILITY_WINDOW.describe()}"
        )
    x0 = brentq(residual, x_zero, x_border, xtol=1e-16 * x_zero, rtol=_RTOL, maxiter=200)
    q = min(1.0 / (w * w * x0**3), 1.0)
    return EquilibriumPoint(units.to_si(x0, "length"), q, omega, field_amplitude)


def field_from_q(
    q: float,
    omega: float,
    particle: ParticleSpec,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """Drive amplitude (V/m) that puts the packet at confinement q for drive frequency omega."""
    q = check_window(q)
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega!r}")
    m = particle.mass(constants)
    x0 = (particle.coupling(constants) / (m * omega * omega * q)) ** (1.0 / 3.0)
    return (1.0 - q) * m * omega * omega * x0 / particle.charge(constants)
