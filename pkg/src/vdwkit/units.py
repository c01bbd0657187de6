"""Physical parameters of the harmonic-atom model and the dimensionless
variables used everywhere else in the package.

Conventions
-----------
Heaviside-Lorentz electromagnetism (Coulomb kernel ``1/(4 pi |x - x'|)``).
Internally every module works with the pair

    r = Omega R / c        (retardation parameter)
    g = alpha / R**3       (instantaneous dipole coupling)

and reports energies in units of ``hbar * Omega``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "DimlessPoint",
    "polarizability",
    "to_dimensionless",
    "from_dimensionless",
]


@dataclass(frozen=True)
class ModelParams:
    """Constants of two identical harmonic atoms.

    Parameters
    ----------
    hbar, c, m, omega : float
        Reduced Planck constant, speed of light, electron mass and the
        oscillator frequency. All strictly positive.
    q : float
        Electron charge. Any nonzero value (only ``q**2`` enters).
    """

    hbar: float = 1.0
    c: float = 1.0
    m: float = 1.0
    q: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "c", "m", "omega"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and > 0, got {value!r}")
        if not math.isfinite(self.q) or self.q == 0:
            raise ValueError(f"q must be finite and nonzero, got {self.q!r}")

    @property
    def alpha(self) -> float:
        return polarizability(self)

    @property
    def amplitude(self) -> float:
        """``A = q**2 Omega / (4 pi m)``, the scale of the retarded energy."""
        return self.q**2 * self.omega / (4.0 * math.pi * self.m)


@dataclass(frozen=True)
class DimlessPoint:
    r: float
    g: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError(f"r must be > 0, got {self.r!r}")
        if not self.g >= 0:
            raise ValueError(f"g must be >= 0, got {self.g!r}")


def polarizability(p: ModelParams) -> float:
    """Static polarizability ``q**2 / (4 pi m Omega**2)``."""
    return p.q**2 / (4.0 * math.pi * p.m * p.omega**2)


def to_dimensionless(p: ModelParams, R: float) -> DimlessPoint:
    if not (math.isfinite(R) and R > 0):
        raise ValueError(f"separation must be finite and > 0, got {R!r}")
    return DimlessPoint(r=p.omega * R / p.c, g=polarizability(p) / R**3)


def from_dimensionless(p: ModelParams, point: DimlessPoint) -> float:
    """Separation R recovered from ``point.r``.

    ``g`` carries the same information for a fixed ``p``; ``r`` is used
    because it is linear in R and round-trips without a cube root.
    """
    return point.r * p.c / p.omega
