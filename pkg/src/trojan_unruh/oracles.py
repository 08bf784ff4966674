"""Independent numerical re-derivations of the closed forms.

Nothing here calls the closed-form shape functions: the mode frequencies come
from eigenvalues of the linearized rotating-frame dynamics, the widths from
quadrature of the Gaussian ground packet, and the correlation spectrum from a
Fourier integral of the regularized kernel.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .constants import CODATA2018, ParticleSpec, PhysicalConstants
from .errors import DomainError
from .harmonic import EquilibriumPoint

__all__ = [
    "INSTABILITY_THRESHOLD",
    "LinearizedSystem",
    "LinearizedModes",
    "linearized_system",
    "linearized_mode_frequencies",
    "stability_border",
    "WavepacketGaussian",
    "GaussianMoments",
    "gaussian_moments",
    "equilibrium_residual",
    "SpectrumProbe",
    "spectrum_probe",
    "emission_side",
]

# real parts below this count as rounding noise of a marginally stable spectrum
INSTABILITY_THRESHOLD = 1e-9


@dataclass(frozen=True)
class LinearizedSystem:
    """First-order dynamics of (dx, dy, dvx, dvy) about the packet centre, omega = 1."""

    q: float
    dynamics_matrix: np.ndarray


def linearized_system(q: float) -> LinearizedSystem:
    # Coulomb Hessian (-2q, q) plus centrifugal +1 in-plane, Coriolis 2 omega x v
    m = np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0 + 2.0 * q, 0.0, 0.0, 2.0],
            [0.0, 1.0 - q, -2.0, 0.0],
        ]
    )
    return LinearizedSystem(q=float(q), dynamics_matrix=m)


@dataclass(frozen=True)
class LinearizedModes:
    plus: float
    minus: float
    z: float
    max_real_part: float

    @property
    def stable(self) -> bool:
        return self.max_real_part <= INSTABILITY_THRESHOLD


def linearized_mode_frequencies(q: float) -> LinearizedModes:
    """Mode frequencies (units of omega) from the numeric spectrum.

    Outside the window this does not raise; ``stable`` is False instead.
    """
    eig = np.linalg.eigvals(linearized_system(q).dynamics_matrix)
    freqs = np.sort(np.abs(eig.imag))[::-1]
    # eigenvalues come in +-i w pairs; take one of each
    plus, minus = freqs[0], freqs[2]
    z_block = np.array([[0.0, 1.0], [-q, 0.0]])
    z = np.max(np.abs(np.linalg.eigvals(z_block).imag))
    return LinearizedModes(float(plus), float(minus), float(z), float(np.max(np.abs(eig.real))))


def stability_border(lo: float = 0.8, hi: float = 0.95, tol: float = 1e-12) -> float:
    """Bisect on the instability flag for the lower edge of the stable window."""
    if linearized_mode_frequencies(lo).stable or not linearized_mode_frequencies(hi).stable:
        raise ValueError(f"[{lo}, {hi}] does not bracket the stability border")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if linearized_mode_frequencies(mid).stable:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class WavepacketGaussian:
    """Harmonic ground packet

        psi0 = N exp(i m w x0 y/hbar) exp(-m w [A (x-x0)^2 + B y^2 + 2i C (x-x0) + D z^2] / 2 hbar)

    in SI units. C enters only through a phase.
    """

    A: float
    B: float
    C: float
    D: float
    x0: float
    mass: float
    omega: float
    hbar: float = CODATA2018.reduced_planck

    def __post_init__(self):
        for name in ("A", "B", "D"):
            if not getattr(self, name) > 0:
                raise DomainError(f"width parameter {name} must be positive, got {getattr(self, name)!r}")

    @property
    def length_scale(self) -> float:
        return math.sqrt(self.hbar / (self.mass * self.omega))

    @property
    def normalization(self) -> float:
        return (self.mass * self.omega / (math.pi * self.hbar)) ** 0.75 * (self.A * self.B * self.D) ** 0.25

    def axis_factors(self):
        """Per-axis factors of psi0 / N in the scaled coordinate u = (r - r0)/length_scale."""
        ell = self.length_scale
        x0_u = self.x0 / ell

        def fx(u):
            return cmath.exp(-0.5 * (self.A * u * u + 2j * self.C * u))

        def fy(u):
            return cmath.exp(1j * x0_u * u) * cmath.exp(-0.5 * self.B * u * u)

        def fz(u):
            return cmath.exp(-0.5 * self.D * u * u)

        return fx, fy, fz


@dataclass(frozen=True)
class GaussianMoments:
    var_x: float  # <(x - x0)^2>, m^2
    var_y: float
    var_z: float
    norm: float


def _axis_integrals(factor, width: float) -> tuple[float, float]:
    half = 8.0 * math.sqrt(0.5 / width)  # 8 sigma of |factor|^2

    def density(u):
        return abs(factor(u)) ** 2

    zeroth, _ = integrate.quad(density, -half, half, epsabs=1e-13, epsrel=1e-13, limit=200)
    second, _ = integrate.quad(lambda u: u * u * density(u), -half, half, epsabs=1e-13, epsrel=1e-13, limit=200)
    return zeroth, second


def gaussian_moments(pkt: WavepacketGaussian) -> GaussianMoments:
    """Quadrature of |psi0|^2, axis by axis."""
    ell = pkt.length_scale
    results = [_axis_integrals(f, w) for f, w in zip(pkt.axis_factors(), (pkt.A, pkt.B, pkt.D))]
    norm = (pkt.normalization * ell**1.5) ** 2
    for zeroth, _ in results:
        norm *= zeroth
    var = [ell * ell * second / zeroth for zeroth, second in results]
    return GaussianMoments(var_x=var[0], var_y=var[1], var_z=var[2], norm=norm)


def equilibrium_residual(
    pt: EquilibriumPoint,
    particle: ParticleSpec,
    constants: PhysicalConstants = CODATA2018,
) -> float:
    """|kappa/x0^2 + z e E - m w^2 x0| / (m w^2 x0).

    The drive force is counted as a magnitude pulling toward the nucleus, the same
    convention under which z e E = (1 - q) m w^2 x0.
    """
    m = particle.mass(constants)
    centrifugal = m * pt.omega**2 * pt.x0
    coulomb = particle.coupling(constants) / pt.x0**2
    return abs(coulomb + particle.charge(constants) * pt.field_amplitude - centrifugal) / centrifugal


@dataclass(frozen=True)
class SpectrumProbe:
    """Regularized kernel prefactor / (tau - i epsilon)^4 of the orbit field correlation."""

    epsilon: float
    prefactor: float = 4.0 * CODATA2018.reduced_planck / (
        math.pi * CODATA2018.vacuum_permittivity * CODATA2018.light_speed**3
    )

    def __post_init__(self):
        if not self.epsilon > 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon!r}")


def spectrum_probe(probe: SpectrumProbe, Omega: float) -> float:
    """Integral of exp(-i Omega tau) prefactor/(tau - i eps)^4 over the real line.

    With s = tau/eps the kernel is (s + i)^4/(s^2 + 1)^4 / eps^4; its real part is even
    and its imaginary part odd, so the transform is real:
    2/eps^3 * int_0^inf [Re k(s) cos(W s) + Im k(s) sin(W s)] ds, W = Omega eps.
    """
    if Omega == 0:
        raise DomainError("Omega must be nonzero")
    eps = probe.epsilon
    w = Omega * eps

    def re_k(s):
        return (s**4 - 6.0 * s * s + 1.0) / (s * s + 1.0) ** 4

    def im_k(s):
        return 4.0 * (s**3 - s) / (s * s + 1.0) ** 4

    # peak region with an oscillatory rule, tail with the Fourier-integral rule
    split = 20.0
    opts = dict(epsabs=1e-14, epsrel=1e-10, limit=400)
    head = integrate.quad(re_k, 0.0, split, weight="cos", wvar=w, **opts)[0]
    head += integrate.quad(im_k, 0.0, split, weight="sin", wvar=w, **opts)[0]
    tail_opts = dict(epsabs=1e-15, limlst=200)
    tail = integrate.quad(re_k, split, np.inf, weight="cos", wvar=abs(w), **tail_opts)[0]
    tail += math.copysign(1.0, w) * integrate.quad(im_k, split, np.inf, weight="sin", wvar=abs(w), **tail_opts)[0]
    return probe.prefactor * 2.0 * (head + tail) / eps**3


def emission_side(probe: SpectrumProbe, Omega: float) -> int:
    """Sign of Omega whose transform is nonzero (-1 or +1), measured at |Omega|."""
    lo = abs(spectrum_probe(probe, -abs(Omega)))
    hi = abs(spectrum_probe(probe, abs(Omega)))
    return -1 if lo > hi else 1
