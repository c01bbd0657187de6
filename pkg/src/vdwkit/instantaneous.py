"""Interaction energy of two harmonic atoms with an instantaneous (Coulomb)
dipole coupling.

Energies are in units of ``hbar * Omega`` and the coupling is
``g = alpha / R**3``. In the frame with R along z the dipole coupling
tensor has eigenvalues ``(-g, -g, 2g)``, so the coupled problem splits into
three independent pairs of bilinearly coupled oscillators. A pair with
coupling ``c`` has normal-mode frequencies ``sqrt(1 + c)`` and
``sqrt(1 - c)``; the second one turns imaginary for ``c > 1``, which is
where the energy picks up an imaginary part.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .specfun import QuadratureSpec, integrate, integrate_semi_infinite
from .units import ModelParams, polarizability

__all__ = [
    "CHANNEL_WEIGHTS",
    "ComplexEnergy",
    "dipole_coupling_tensor",
    "dipole_correlator",
    "london_energy",
    "pair_energy",
    "exact_energy_spectral",
    "exact_energy_normal_modes",
    "thresholds",
    "london_series_coefficients",
]

# eigenvalues of the dipole-dipole tensor in units of alpha/R^3:
# two transverse channels and one longitudinal channel
CHANNEL_WEIGHTS = (-1, -1, 2)


@dataclass(frozen=True)
class ComplexEnergy:
    re: float
    im: float = 0.0

    def __post_init__(self):
        if self.im > 0:
            raise ValueError(f"imaginary part must be <= 0 (decay), got {self.im!r}")

    def __complex__(self):
        return complex(self.re, self.im)


def dipole_coupling_tensor(direction=(0.0, 0.0, 1.0)) -> np.ndarray:
    """``4 pi R**3 F^ij = 3 n^i n^j - delta^ij`` for the unit vector ``n``.

    Multiplying by ``g`` gives the coupling matrix between the scaled
    coordinates of the two atoms.
    """
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    return 3.0 * np.outer(n, n) - np.eye(3)


def dipole_correlator(p: ModelParams, tau, tau_prime=0.0):
    """Imaginary-time contraction <T r^i(tau) r^i(tau')> for one component."""
    dt = np.abs(np.asarray(tau, dtype=float) - tau_prime)
    return p.hbar / (2.0 * p.m * p.omega) * np.exp(-p.omega * dt)


def _check_coupling(g):
    g = float(g)
    if not (math.isfinite(g) and g >= 0):
        raise ValueError(f"coupling g must be finite and >= 0, got {g!r}")
    return g


def london_energy(g: float) -> float:
    """Second-order (London) energy ``-3/4 g**2``."""
    g = _check_coupling(g)
    return -0.75 * g * g


def pair_energy(c):
    """(re, im) of ``(sqrt(1+c) + sqrt(1-c) - 2) / 2`` for one channel."""
    c = abs(c)
    up = math.sqrt(1.0 + c)
    if c <= 1.0:
        down = math.sqrt(1.0 - c)
        # cancellation-free form of up + down - 2
        return -c * c / ((1.0 + up) * (1.0 + down) * (up + down)), 0.0
    # decaying branch: sqrt(1 - c) = -i sqrt(c - 1)
    return 0.5 * (up - 2.0), -0.5 * math.sqrt(c - 1.0)


def exact_energy_normal_modes(g: float) -> ComplexEnergy:
    g = _check_coupling(g)
    re = im = 0.0
    for w in CHANNEL_WEIGHTS:
        a, b = pair_energy(w * g)
        re += a
        im += b
    return ComplexEnergy(re, im)


def _log_real(nu, c):
    """log|1 - (c/d)**2| with d = nu**2 + 1.

    Written as log|nu**2 + (1 - c)| + log(d + c) - 2 log d so the zero at
    ``nu**2 = c - 1`` (and at nu = 0 when c = 1) is resolved without
    cancellation; log1p is used where the argument is close to 1.
    """
    nu2 = nu * nu
    d = nu2 + 1.0
    x2 = (c / d) ** 2
    small = x2 < 0.5
    near = np.log1p(-np.where(small, x2, 0.0))
    with np.errstate(divide="ignore"):
        far = np.log(np.abs(nu2 + (1.0 - c))) + np.log(d + c) - 2.0 * np.log(d)
    return np.where(small, near, far)


def exact_energy_spectral(g: float, spec: QuadratureSpec | None = None) -> ComplexEnergy:
    """All-orders energy from the frequency integral of the log-determinant.

    For a channel with coupling ``c > 1`` the log argument
    ``1 - (c/(nu**2 + 1))**2`` is negative for ``nu < sqrt(c - 1)``; there
    the log is taken as ``log|.| - i pi`` so the imaginary part has the
    decaying sign. The axis is split at those roots.
    """
    g = _check_coupling(g)
    spec = spec or QuadratureSpec()
    if g == 0:
        return ComplexEnergy(0.0, 0.0)
    couplings = [abs(w) * g for w in CHANNEL_WEIGHTS]

    def real_part(nu):
        return sum(_log_real(nu, c) for c in couplings)

    roots = sorted({math.sqrt(c - 1.0) for c in couplings if c > 1.0})
    re = integrate_semi_infinite(real_part, spec, breakpoints=roots).value

    im = 0.0
    edges = [0.0] + roots
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (lo + hi)
        n_open = sum(1 for c in couplings if mid * mid + 1.0 < c)

        def imag_part(nu, n_open=n_open):
            return np.full_like(nu, -math.pi * n_open)

        im += integrate(imag_part, lo, hi, spec).value

    # (1/2) * integral over the full line / (2 pi) = (1/2pi) * half line
    return ComplexEnergy(re / (2.0 * math.pi), im / (2.0 * math.pi))


def thresholds(p: ModelParams) -> tuple[float, float]:
    """Separations ``(R1, R2)`` at which the longitudinal (g = 1/2) and
    transverse (g = 1) channels become unstable."""
    alpha = polarizability(p)
    return (2.0 * alpha) ** (1.0 / 3.0), alpha ** (1.0 / 3.0)


def _half_binomial(n):
    out = Fraction(1)
    for j in range(n):
        out *= Fraction(1, 2) - j
    return out / math.factorial(n)


def london_series_coefficients(order: int) -> list[Fraction]:
    """Exact Taylor coefficients ``[c2, c4, ..., c_order]`` of the
    normal-mode energy in powers of g.

    Each channel with coupling ``w g`` contributes
    ``binom(1/2, n) (w g)**n`` at even n; odd orders vanish identically.
    """
    if order not in (2, 4, 6, 8):
        if isinstance(order, int) and order % 2 == 1:
            raise ValueError(f"odd order {order}: all odd coefficients vanish")
        raise ValueError(f"order must be one of 2, 4, 6, 8, got {order!r}")
    weight_sum = lambda n: sum(Fraction(w) ** n for w in CHANNEL_WEIGHTS)
    return [_half_binomial(n) * weight_sum(n) for n in range(2, order + 1, 2)]
