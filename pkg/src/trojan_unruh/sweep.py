"""q-sweeps of the shape functions and both emission rates (figure data)."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .constants import ParticleSpec, kepler_frequency
from .errors import DomainError
from .harmonic import Q_MAX, Q_MIN, STABILITY_WINDOW, q_of_scaled_field, scaled_field_of_q, shape_set
from .rates import Convention, gamma_sp, gamma_ud, ratio_ud_sp

__all__ = ["SWEEP_FIELDS", "SweepRow", "q_grid", "sweep_rows"]

SWEEP_FIELDS = (
    "q",
    "scaled_field",
    "theta",
    "A",
    "B",
    "C",
    "lambda",
    "alpha_tilde_sq",
    "gamma_ud_per_s",
    "gamma_sp_per_s",
    "ratio",
)


class SweepRow(NamedTuple):
    q: float
    scaled_field: float
    theta: float
    A: float
    B: float
    C: float
    lam: float
    alpha_tilde_sq: float
    gamma_ud_per_s: float
    gamma_sp_per_s: float | None  # None where the rate diverges (q = 1)
    ratio: float | None

    def as_record(self) -> dict:
        return dict(zip(SWEEP_FIELDS, self))


def q_grid(q_from: float, q_to: float, points: int, grid: str = "q") -> np.ndarray:
    """Increasing q values, uniform in q or in the scaled field."""
    if points < 2:
        raise DomainError(f"a sweep needs at least 2 points, got {points}")
    if not (Q_MIN < q_from < q_to <= Q_MAX):
        raise DomainError(
            f"q range [{q_from}, {q_to}] must be increasing and inside the window; {STABILITY_WINDOW.describe()}"
        )
    if grid == "q":
        return np.linspace(q_from, q_to, points)
    if grid == "scaled-field":
        fields = np.linspace(scaled_field_of_q(q_from), scaled_field_of_q(q_to), points)
        qs = np.array([q_of_scaled_field(f) for f in fields])
        qs[0], qs[-1] = q_from, q_to
        return qs
    raise DomainError(f"unknown grid {grid!r}; expected 'q' or 'scaled-field'")


def sweep_rows(
    qs,
    particle: ParticleSpec,
    n: int = 1,
    convention: Convention = Convention.CALIBRATED,
) -> list[SweepRow]:
    omega = kepler_frequency(n, particle)
    rows = []
    for q in qs:
        q = float(q)
        s = shape_set(q)
        if q == Q_MAX:
            sp = ratio = None
        else:
            sp = gamma_sp(q, omega, particle)
            ratio = ratio_ud_sp(q, convention)
        rows.append(
            SweepRow(
                q=q,
                scaled_field=scaled_field_of_q(q),
                theta=s.theta,
                A=s.A,
                B=s.B,
                C=s.C,
                lam=s.lam,
                alpha_tilde_sq=s.alpha_tilde_sq,
                gamma_ud_per_s=gamma_ud(q, omega, particle, convention),
                gamma_sp_per_s=sp,
                ratio=ratio,
            )
        )
    return rows
