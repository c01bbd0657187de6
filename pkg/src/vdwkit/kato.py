"""Rayleigh-Schroedinger vacuum energy from Kato's reduced-resolvent
coefficient formula, evaluated on truncated Fock spaces.

With ``S^0 = -P`` and ``S^k = Q H0^-k Q`` (k >= 1) the n-th order vacuum
energy of ``H0 + V`` is

    E(n) = (-1)**(n-1) * sum_k  w(k) <0| V S^k1 V S^k2 ... S^k(n-1) V |0>

summed over compositions ``k1 + ... + k(n-1) = n - 1`` with nonnegative
parts. ``w(k) = 1 / (1 + number of zero parts)``: a string with m vacuum
projectors is one of m cyclic rotations of the same trace term in Kato's
``(1/n) tr[...]`` form and must be counted once, not m times. The sign
comes from the ``-z**k S^(k+1)`` terms of the Laurent expansion of
``(z - H0)**-1``. Both factors are 1 through third order without a
first-order shift, and first differ at fourth order, where the formula
reduces to ``chained - subtraction`` (see
:func:`verify_fourth_order_subtraction`).

Engine functions accept any diagonal ``H0`` with a nondegenerate zero
vacuum at basis index 0 and any ``V``; only the builders are specific to
the dipole-coupled atoms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, NamedTuple

import numpy as np
import scipy.sparse as sp

from .instantaneous import CHANNEL_WEIGHTS

__all__ = [
    "FockSpace",
    "FockOperator",
    "KatoTerm",
    "compositions",
    "annihilation",
    "creation",
    "number",
    "position",
    "build_coupled_pair",
    "build_bilinear",
    "s_operator",
    "kato_energy_coefficient",
    "FourthOrderCheck",
    "verify_fourth_order_subtraction",
]

MAX_DIMENSION = 10**6


@dataclass(frozen=True)
class FockSpace:
    n_oscillators: int
    n_max: int

    def __post_init__(self):
        if self.n_oscillators < 1:
            raise ValueError("need at least one oscillator")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.dimension > MAX_DIMENSION:
            raise ValueError(
                f"Fock dimension {self.dimension} exceeds the limit {MAX_DIMENSION}"
            )

    @property
    def dimension(self) -> int:
        return (self.n_max + 1) ** self.n_oscillators

    def index(self, occupations) -> int:
        """Lexicographic position of an occupation tuple (oscillator 0 is
        the most significant digit)."""
        if len(occupations) != self.n_oscillators:
            raise ValueError("occupation tuple has the wrong length")
        idx = 0
        for n in occupations:
            if not 0 <= n <= self.n_max:
                raise ValueError(f"occupation {n} outside [0, {self.n_max}]")
            idx = idx * (self.n_max + 1) + n
        return idx

    def occupations(self, index: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.n_oscillators):
            index, n = divmod(index, self.n_max + 1)
            digits.append(n)
        return tuple(reversed(digits))


@dataclass(frozen=True)
class FockOperator:
    space: FockSpace
    matrix: sp.csr_matrix

    def __post_init__(self):
        dim = self.space.dimension
        if self.matrix.shape != (dim, dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match space {dim}")

    def __add__(self, other):
        _same_space(self, other)
        return FockOperator(self.space, (self.matrix + other.matrix).tocsr())

    def __sub__(self, other):
        _same_space(self, other)
        return FockOperator(self.space, (self.matrix - other.matrix).tocsr())

    def __matmul__(self, other):
        _same_space(self, other)
        return FockOperator(self.space, (self.matrix @ other.matrix).tocsr())

    def __mul__(self, scalar):
        return FockOperator(self.space, (self.matrix * scalar).tocsr())

    __rmul__ = __mul__

    def element(self, bra, ket) -> float:
        return float(self.matrix[self.space.index(bra), self.space.index(ket)])

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()


def _same_space(a, b):
    if a.space != b.space:
        raise ValueError(f"operator spaces differ: {a.space} vs {b.space}")


def _embed(space, mode, single):
    if not 0 <= mode < space.n_oscillators:
        raise ValueError(f"mode {mode} outside [0, {space.n_oscillators})")
    eye = sp.identity(space.n_max + 1, format="csr")
    factors = [single if i == mode else eye for i in range(space.n_oscillators)]
    return FockOperator(space, reduce(lambda a, b: sp.kron(a, b, format="csr"), factors))


def _lowering(n_max):
    return sp.diags(np.sqrt(np.arange(1, n_max + 1, dtype=float)), 1, format="csr")


def annihilation(space: FockSpace, mode: int) -> FockOperator:
    return _embed(space, mode, _lowering(space.n_max))


def creation(space: FockSpace, mode: int) -> FockOperator:
    return _embed(space, mode, _lowering(space.n_max).T.tocsr())


def number(space: FockSpace, mode: int) -> FockOperator:
    return _embed(space, mode, sp.diags(np.arange(space.n_max + 1, dtype=float), format="csr"))


def position(space: FockSpace, mode: int) -> FockOperator:
    """Scaled coordinate ``(a + a^dagger) / sqrt(2)``."""
    low = _lowering(space.n_max)
    return _embed(space, mode, ((low + low.T) / math.sqrt(2.0)).tocsr())


def build_bilinear(coupling: np.ndarray, n_max: int) -> tuple[FockOperator, FockOperator]:
    """``H0 = sum n_i`` and ``V = sum_ij K_ij x_A,i x_B,j`` for two atoms
    with ``d`` oscillators each, ``K`` a d x d matrix (energies in hbar
    Omega). Modes are ordered A_0..A_(d-1), B_0..B_(d-1)."""
    K = np.atleast_2d(np.asarray(coupling, dtype=float))
    d = K.shape[0]
    if K.shape != (d, d):
        raise ValueError("coupling must be a square matrix")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    space = FockSpace(2 * d, n_max)
    h0 = reduce(lambda a, b: a + b, (number(space, i) for i in range(2 * d)))
    v = FockOperator(space, sp.csr_matrix((space.dimension, space.dimension)))
    xs = [position(space, i) for i in range(2 * d)]
    for i in range(d):
        for j in range(d):
            if K[i, j] != 0.0:
                v = v + K[i, j] * (xs[i] @ xs[d + j])
    return h0, v


def build_coupled_pair(g: float, n_max: int, channels: int = 1) -> tuple[FockOperator, FockOperator]:
    """Dipole-coupled atoms at coupling ``g = alpha/R**3``.

    ``channels=1`` gives a single pair ``V = g x_A x_B``; ``channels=3``
    gives all three Cartesian pairs with the tensor eigenvalues
    ``(-1, -1, 2) g``.
    """
    if not (math.isfinite(g) and g >= 0):
        raise ValueError(f"g must be finite and >= 0, got {g!r}")
    if channels == 1:
        K = np.array([[g]])
    elif channels == 3:
        K = g * np.diag(np.array(CHANNEL_WEIGHTS, dtype=float))
    else:
        raise ValueError(f"channels must be 1 or 3, got {channels!r}")
    return build_bilinear(K, n_max)


def _diagonal_spectrum(h0):
    m = h0.matrix
    diag = m.diagonal()
    off = m - sp.diags(diag)
    if off.count_nonzero():
        raise ValueError("H0 must be diagonal in the Fock basis")
    if diag[0] != 0.0:
        raise ValueError(f"H0 vacuum energy must be exactly 0, got {diag[0]!r}")
    if diag.size > 1 and not np.all(diag[1:] > 0):
        raise ValueError("H0 vacuum must be nondegenerate and isolated (excited levels > 0)")
    return diag


def s_operator(h0: FockOperator, k: int) -> FockOperator:
    """``S^0 = -|0><0|`` and ``S^k = Q H0^-k Q`` for k >= 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    diag = _diagonal_spectrum(h0)
    out = np.zeros_like(diag)
    if k == 0:
        out[0] = -1.0
    else:
        out[1:] = diag[1:] ** (-float(k))
    return FockOperator(h0.space, sp.diags(out, format="csr"))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative integers,
    in lexicographic order (stars and bars)."""
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class KatoTerm:
    ks: tuple[int, ...]

    def __post_init__(self):
        if any(k < 0 for k in self.ks):
            raise ValueError("composition entries must be >= 0")
        if sum(self.ks) != len(self.ks):
            raise ValueError(f"entries of {self.ks} must sum to {len(self.ks)}")

    @property
    def order(self) -> int:
        return len(self.ks) + 1

    @property
    def weight(self) -> float:
        return 1.0 / (1 + self.ks.count(0))


def _term_value(diag, v, v0, ks):
    # <0| V S^k1 V ... S^k(n-1) V |0>, evaluated left to right
    u = v0.copy()  # row vector <0|V, transposed
    for j, k in enumerate(ks):
        if k == 0:
            u = np.where(np.arange(u.size) == 0, -u[0], 0.0)
        else:
            u = np.concatenate(([0.0], u[1:] * diag[1:] ** (-float(k))))
        if j < len(ks) - 1:
            u = v.T @ u
    return float(np.dot(u, v @ _unit(diag.size)))


def _unit(n):
    e = np.zeros(n)
    e[0] = 1.0
    return e


def kato_energy_coefficient(h0: FockOperator, v: FockOperator, n: int) -> float:
    """n-th order vacuum energy coefficient of ``H0 + lambda V``."""
    if n < 1:
        raise ValueError("order must be >= 1")
    _same_space(h0, v)
    diag = _diagonal_spectrum(h0)
    vm = v.matrix
    if n == 1:
        return float(vm[0, 0])
    v0 = vm.T @ _unit(diag.size)
    total = 0.0
    for ks in compositions(n - 1, n - 1):
        term = KatoTerm(ks)
        total += term.weight * _term_value(diag, vm, v0, ks)
    return (-1.0) ** (n - 1) * total


class FourthOrderCheck(NamedTuple):
    direct: float
    chained: float
    subtraction: float


def verify_fourth_order_subtraction(h0: FockOperator, v: FockOperator, tol: float = 1e-12) -> FourthOrderCheck:
    """Fourth-order energy as ``chained - subtraction``.

    ``chained = <0|V R V R V R V|0>`` and
    ``subtraction = <0|V R V|0> <0|V R^2 V|0>`` with the signed reduced
    resolvent ``R = Q (0 - H0)^-1 Q = -S^1``. Raises ArithmeticError if
    the general coefficient formula disagrees beyond ``tol`` (relative to
    the largest of the three magnitudes, absolute below 1).
    """
    direct = kato_energy_coefficient(h0, v, 4)
    diag = _diagonal_spectrum(h0)
    vm = v.matrix
    v0 = vm.T @ _unit(diag.size)
    # (-1)^3 for three R factors; (-1)^1 * (+1) for R and R^2
    chained = -_term_value(diag, vm, v0, (1, 1, 1))
    subtraction = -_term_value(diag, vm, v0, (1,)) * _term_value(diag, vm, v0, (2,))
    scale = max(1.0, abs(direct), abs(chained), abs(subtraction))
    if abs(direct - (chained - subtraction)) > tol * scale:
        raise ArithmeticError(
            f"fourth-order identity violated: direct={direct!r}, "
            f"chained - subtraction={chained - subtraction!r}"
        )
    return FourthOrderCheck(direct, chained, subtraction)
