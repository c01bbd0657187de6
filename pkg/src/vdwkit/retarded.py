"""Fourth-order retarded (Casimir-Polder) interaction energy.

All energies here are in the normalization

    F(r) = -E r**6 / A**2,    r = Omega R / c,    A = q**2 Omega / (4 pi m)

in units of hbar Omega, so ``F -> 3/4`` at short distance (London) and
``F -> 23/(4 pi r)`` at long distance. The physical energy is
``E = -hbar Omega g**2 F(r)`` with ``g = alpha / R**3``.

Three independent evaluations are provided.

Tensor route
    ``F = 8 pi r**6 int_0^inf dnu  sum_ij I_ij(r, nu)**2 / (nu**2 + 1)**2``
    with the electric-field correlator of :func:`field_correlator`. This is
    ``-(1/2) int dnu/2pi (M(nu) I_ij)**2`` with ``M = 4 pi A/(nu**2+1)``
    after setting hbar = Omega = c = 1.

Reduced integral
    ``F = (r**3/pi) int_0^inf du (u**4 + 2u**3 + 5u**2 + 6u + 3)
    exp(-2u) / (u**2 + r**2)**2``, obtained from the tensor route by
    ``u = nu r`` and ``sum I**2 = exp(-2u) (2 P(u)) / (16 pi**2 r**6)``.

Closed form
    ``F = B(r) / (2 pi)`` with
    ``B = r(6 - r**2) + (3 - 7r**2 + r**4) f(2r) + 2r(3 - 3r**2 + r**4) g(2r)``
    and the auxiliary functions f, g. B carries a prefactor ``1/r**6``
    relative to ``E``, not ``1/r**3``; only that reading reproduces both
    limits and the reduced integral. The terms of B are of size r**4 while
    B itself falls like 1/r, so the direct sum has a relative error of
    roughly r**5 eps (a few 1e-12 near r = 20). For ``r >= 25``
    B is summed from its large-r expansion instead (exact rational
    coefficients), which is accurate to ~1e-13 there and better beyond.

Field correlator
----------------
For ``phi = exp(-k R)/(4 pi R)`` with ``k = |nu|`` and ``R`` along an
axis, ``phi' = -(k + 1/R) phi``, ``phi'' = (k**2 + 2k/R + 2/R**2) phi``
and ``lap phi = k**2 phi`` away from the origin. Then

    d_i d_j phi = n_i n_j (phi'' - phi'/R) + delta_ij phi'/R

so the operator ``delta_ij lap - d_i d_j`` has components

    longitudinal = k**2 phi - phi''  = -2 (1 + kR) exp(-kR) / (4 pi R**3)
    transverse   = k**2 phi - phi'/R = (1 + kR + k**2 R**2) exp(-kR) / (4 pi R**3)

The contact term ``-delta_ij delta(R)`` is dropped (R > 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .specfun import QuadratureSpec, aux_f, aux_g, integrate, integrate_semi_infinite
from .units import ModelParams, to_dimensionless

__all__ = [
    "LONDON_CONSTANT",
    "CASIMIR_POLDER_CONSTANT",
    "SpectralTensor3",
    "CrossoverCurve",
    "dipole_spectral_correlator",
    "field_correlator",
    "e4_energy_tensor",
    "e4_energy_reduced",
    "reduced_integrand",
    "e4_energy_closed",
    "e4_energy_static_replacement",
    "asymptote_london",
    "asymptote_casimir_polder",
    "cp_to_london_ratio",
    "crossover_curve",
    "retarded_energy",
]

LONDON_CONSTANT = 0.75
CASIMIR_POLDER_CONSTANT = 23.0 / (4.0 * math.pi)

REDUCED_CUTOFF = 40.0
_ASYMPTOTIC_FROM = 25.0
_ASYMPTOTIC_TERMS = 14


def _check_r(r, name="r"):
    r = float(r)
    if not (math.isfinite(r) and r > 0):
        raise ValueError(f"{name} must be finite and > 0, got {r!r}")
    return r


def dipole_spectral_correlator(nu):
    """``M(nu) m Omega**2 / q**2 = 1/(nu**2 + 1)`` with nu in units of Omega."""
    nu = np.asarray(nu, dtype=float)
    return 1.0 / (nu * nu + 1.0)


@dataclass(frozen=True)
class SpectralTensor3:
    """Electric-field correlator I_ij(R, nu) in the frame with R along z."""

    longitudinal: float | np.ndarray
    transverse: float | np.ndarray

    def matrix(self) -> np.ndarray:
        if np.ndim(self.longitudinal):
            raise ValueError("matrix() needs scalar components")
        return np.diag([self.transverse, self.transverse, self.longitudinal])

    def self_contraction(self):
        """``sum_ij I_ij I_ji``."""
        return self.longitudinal**2 + 2.0 * self.transverse**2

    def trace(self):
        return self.longitudinal + 2.0 * self.transverse


def field_correlator(r_sep, nu) -> SpectralTensor3:
    """Components of ``(delta_ij lap - d_i d_j) exp(-|nu| R)/(4 pi R)``.

    ``r_sep`` and ``nu`` are in reciprocal units (c = 1); both may be
    arrays that broadcast.
    """
    R = np.asarray(r_sep, dtype=float)
    if np.any(~np.isfinite(R)) or np.any(R <= 0):
        raise ValueError("separation must be finite and > 0")
    u = np.abs(np.asarray(nu, dtype=float)) * R
    base = np.exp(-u) / (4.0 * math.pi * R**3)
    longitudinal = -2.0 * (1.0 + u) * base
    transverse = (1.0 + u + u * u) * base
    if longitudinal.ndim == 0:
        return SpectralTensor3(float(longitudinal), float(transverse))
    return SpectralTensor3(longitudinal, transverse)


def e4_energy_tensor(r: float, spec: QuadratureSpec | None = None) -> float:
    r = _check_r(r)
    spec = spec or QuadratureSpec()
    r6 = r**6

    def integrand(nu):
        tensor = field_correlator(r, nu)
        return r6 * tensor.self_contraction() * dipole_spectral_correlator(nu) ** 2

    # two scales: the oscillator (nu ~ 1) and the light travel time (nu ~ 1/r)
    breaks = sorted({1.0, 1.0 / r})
    res = integrate_semi_infinite(integrand, spec, breakpoints=breaks, scale=min(1.0, 1.0 / r))
    return 8.0 * math.pi * res.value


def reduced_integrand(u, r):
    """``P(u) exp(-2u) / (u**2 + r**2)**2`` (without the r**3/pi prefactor)."""
    u = np.asarray(u, dtype=float)
    poly = (((u + 2.0) * u + 5.0) * u + 6.0) * u + 3.0
    return poly * np.exp(-2.0 * u) / (u * u + r * r) ** 2


def e4_energy_reduced(r: float, spec: QuadratureSpec | None = None, cutoff: float = REDUCED_CUTOFF) -> float:
    """Reduced one-dimensional integral on ``[0, cutoff]``.

    ``exp(-2u)`` makes the neglected tail below 1e-30 of the total for the
    default cutoff.
    """
    r = _check_r(r)
    spec = spec or QuadratureSpec()
    r3 = r**3
    breaks = [b for b in (r, 4.0 * r, 16.0 * r, 1.0) if b < cutoff]
    res = integrate(lambda u: r3 * reduced_integrand(u, r), 0.0, cutoff, spec, breakpoints=breaks)
    return res.value / math.pi


def _bracket_expansion(terms):
    """Coefficients ``{p: c}`` of ``B(r) ~ sum c r**p`` from the asymptotic
    series f(x) ~ sum (-1)^k (2k)!/x^(2k+1), g(x) ~ sum (-1)^k (2k+1)!/x^(2k+2)
    at x = 2r. Powers affected by the truncation are dropped."""
    coeffs: dict[int, Fraction] = {1: Fraction(6), 3: Fraction(-1)}

    def add(p, c):
        coeffs[p] = coeffs.get(p, Fraction(0)) + c

    for k in range(terms):
        fk = Fraction((-1) ** k * math.factorial(2 * k), 2 ** (2 * k + 1))
        gk = Fraction((-1) ** k * math.factorial(2 * k + 1), 2 ** (2 * k + 2))
        for c, p in ((3, 0), (-7, 2), (1, 4)):
            add(p - (2 * k + 1), c * fk)
        for c, p in ((6, 1), (-6, 3), (2, 5)):
            add(p - (2 * k + 2), c * gk)
    lowest_exact = 4 - (2 * terms + 1)
    return {p: c for p, c in coeffs.items() if c != 0 and p > lowest_exact}


_BRACKET_SERIES = sorted(
    ((p, float(c)) for p, c in _bracket_expansion(_ASYMPTOTIC_TERMS).items()), reverse=True
)


def _bracket(r):
    if r >= _ASYMPTOTIC_FROM:
        return math.fsum(c * r**p for p, c in _BRACKET_SERIES)
    x = 2.0 * r
    r2 = r * r
    return math.fsum(
        (
            r * (6.0 - r2),
            (3.0 - 7.0 * r2 + r2 * r2) * aux_f(x),
            2.0 * r * (3.0 - 3.0 * r2 + r2 * r2) * aux_g(x),
        )
    )


def e4_energy_closed(r: float) -> float:
    """Closed form in terms of the sine and cosine integrals."""
    r = _check_r(r)
    return _bracket(r) / (2.0 * math.pi)


def e4_energy_static_replacement(r: float, spec: QuadratureSpec | None = None) -> float:
    """Tensor route with the correlator frozen at zero frequency.

    Replacing ``I_ij(R, tau)`` by ``I_ij(R, 0) delta(tau)`` makes the
    spectral correlator nu-independent; the result is r-independent and
    equals the London constant.
    """
    r = _check_r(r)
    spec = spec or QuadratureSpec()
    static = r**6 * field_correlator(r, 0.0).self_contraction()
    res = integrate_semi_infinite(
        lambda nu: static * dipole_spectral_correlator(nu) ** 2, spec
    )
    return 8.0 * math.pi * res.value


def asymptote_london() -> float:
    return LONDON_CONSTANT


def asymptote_casimir_polder() -> float:
    """Limit of ``r F(r)`` for large r."""
    return CASIMIR_POLDER_CONSTANT


def cp_to_london_ratio(r):
    """Ratio of the Casimir-Polder to the London asymptote, ``(23/3pi)/r``."""
    return asymptote_casimir_polder() / (asymptote_london() * np.asarray(r, dtype=float))


@dataclass(frozen=True)
class CrossoverCurve:
    grid: np.ndarray
    energy: np.ndarray
    slope: np.ndarray

    def __post_init__(self):
        if not (len(self.grid) == len(self.energy) == len(self.slope)):
            raise ValueError("columns must have equal length")
        if np.any(np.diff(self.grid) <= 0):
            raise ValueError("grid must be strictly increasing")


def log_slope(grid, values):
    """``d log(values) / d log(grid)``: centered differences inside,
    second-order one-sided stencils at the ends."""
    return np.gradient(np.log(values), np.log(grid), edge_order=2)


def crossover_curve(r_min: float, r_max: float, points: int, spec: QuadratureSpec | None = None) -> CrossoverCurve:
    r_min, r_max = _check_r(r_min, "r_min"), _check_r(r_max, "r_max")
    if not r_min < r_max:
        raise ValueError("need r_min < r_max")
    if points < 8:
        raise ValueError("need at least 8 points")
    grid = np.geomspace(r_min, r_max, points)
    energy = np.array([e4_energy_closed(r) for r in grid])
    return CrossoverCurve(grid, energy, log_slope(grid, energy))


def retarded_energy(p: ModelParams, R: float) -> float:
    """Fourth-order interaction energy at physical separation R, in the
    units of ``p``."""
    point = to_dimensionless(p, R)
    return -p.hbar * p.omega * point.g**2 * e4_energy_closed(point.r)
