"""Sine/cosine integrals, their auxiliary functions, and a deterministic
adaptive quadrature for integrals over ``[0, inf)``.

Si and Ci use the power series up to ``x = 4``. Beyond that the auxiliary
pair ``f, g`` is obtained from the continued fraction of
``exp(ix) E1(ix) = g(x) - i f(x)``, and Si, Ci follow from

    Si(x) = pi/2 - f cos x - g sin x
    Ci(x) = f sin x - g cos x

That is accurate in absolute terms, but g is the small real part of a
quantity of size 1/x and carries a relative error ~x eps. The public
``aux_f``/``aux_g`` therefore use the Laplace forms

    f(x) = int_0^inf exp(-s) / (x (1 + (s/x)**2)) ds
    g(x) = int_0^inf s exp(-s) / (x**2 (1 + (s/x)**2)) ds

for x > 4, whose positive integrands give both to a few ulp.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "EULER_GAMMA",
    "SERIES_CUTOFF",
    "sine_integral",
    "cosine_integral",
    "aux_f",
    "aux_g",
    "QuadratureSpec",
    "QuadratureResult",
    "QuadratureError",
    "ToleranceNotReached",
    "EvaluationError",
    "integrate",
    "integrate_semi_infinite",
]

EULER_GAMMA = 0.57721566490153286060651209008240243
SERIES_CUTOFF = 4.0
_HALF_PI = 0.5 * math.pi
_EPS = 1e-17
_CF_MAX_ITER = 10_000


def _check_arg(x, name, allow_zero):
    x = float(x)
    if math.isnan(x):
        raise ValueError(f"{name}: NaN argument")
    if x < 0 or (x == 0 and not allow_zero):
        bound = ">= 0" if allow_zero else "> 0"
        raise ValueError(f"{name}: argument must be {bound}, got {x!r}")
    return x


def _si_series(x):
    # sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    x2 = x * x
    term = x  # x^(2k+1)/(2k+1)!
    terms = [x]
    k = 0
    while True:
        k += 1
        term *= -x2 / ((2 * k) * (2 * k + 1))
        t = term / (2 * k + 1)
        terms.append(t)
        if abs(t) < _EPS * abs(terms[0]):
            break
    return math.fsum(terms)


def _ci_series(x):
    # gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
    x2 = x * x
    term = 1.0
    terms = [EULER_GAMMA, math.log(x)]
    k = 0
    while True:
        k += 1
        term *= -x2 / ((2 * k - 1) * (2 * k))
        t = term / (2 * k)
        terms.append(t)
        if abs(t) < _EPS:
            break
    return math.fsum(terms)


def _aux_cf(x):
    """(f, g) from the modified-Lentz continued fraction, valid for x >~ 2."""
    tiny = 1e-300
    b = complex(1.0, x)
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(2, _CF_MAX_ITER):
        a = -float((i - 1) ** 2)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta.real - 1.0) + abs(delta.imag) < 1e-16:
            return -h.imag, h.real
    raise ArithmeticError(f"continued fraction did not converge at x={x!r}")


def _sici(x):
    if x <= SERIES_CUTOFF:
        return _si_series(x), _ci_series(x)
    f, g = _aux_cf(x)
    s, c = math.sin(x), math.cos(x)
    return _HALF_PI - f * c - g * s, f * s - g * c


def sine_integral(x: float) -> float:
    """Si(x) = integral of sin(t)/t from 0 to x, for x >= 0."""
    x = _check_arg(x, "sine_integral", allow_zero=True)
    if x == 0:
        return 0.0
    if math.isinf(x):
        return _HALF_PI
    return _sici(x)[0]


def cosine_integral(x: float) -> float:
    """Ci(x) = gamma + ln x + integral of (cos t - 1)/t from 0 to x, x > 0."""
    x = _check_arg(x, "cosine_integral", allow_zero=False)
    if math.isinf(x):
        return 0.0
    return _sici(x)[1]


def _aux_laplace(x, power):
    if math.isinf(x):
        return 0.0
    inv = 1.0 / x
    res = integrate_semi_infinite(
        lambda s: s**power * np.exp(-s) / (1.0 + (s * inv) ** 2),
        _LAPLACE_SPEC,
        breakpoints=_LAPLACE_BREAKS,
    )
    return res.value * inv ** (power + 1)


def aux_f(x: float) -> float:
    """f(x) = Ci(x) sin x - (Si(x) - pi/2) cos x.

    Tends to pi/2 at 0+ and behaves like 1/x for large x.
    """
    x = _check_arg(x, "aux_f", allow_zero=False)
    if x > SERIES_CUTOFF:
        return _aux_laplace(x, 0)
    si, ci = _si_series(x), _ci_series(x)
    return ci * math.sin(x) - (si - _HALF_PI) * math.cos(x)


def aux_g(x: float) -> float:
    """g(x) = -[Ci(x) cos x + (Si(x) - pi/2) sin x].

    Diverges like ``-ln x - gamma`` at the origin, so ``x = 0`` is a domain
    error; decays like 1/x**2 for large x.
    """
    x = _check_arg(x, "aux_g", allow_zero=False)
    if x > SERIES_CUTOFF:
        return _aux_laplace(x, 1)
    si, ci = _si_series(x), _ci_series(x)
    return -(ci * math.cos(x) + (si - _HALF_PI) * math.sin(x))


# ---------------------------------------------------------------------------
# quadrature


class QuadratureError(ArithmeticError):
    pass


class ToleranceNotReached(QuadratureError):
    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class EvaluationError(QuadratureError):
    pass


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 0.0
    rel_tol: float = 1e-12
    max_subdivisions: int = 20_000

    def __post_init__(self):
        if not self.abs_tol >= 0:
            raise ValueError(f"abs_tol must be >= 0, got {self.abs_tol!r}")
        if not 1e-14 <= self.rel_tol <= 1e-2:
            raise ValueError(f"rel_tol must lie in [1e-14, 1e-2], got {self.rel_tol!r}")
        if not 1 <= self.max_subdivisions <= 10**6:
            raise ValueError(
                f"max_subdivisions must lie in [1, 1e6], got {self.max_subdivisions!r}"
            )

    def target(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


_LO_X, _LO_W = np.polynomial.legendre.leggauss(10)
_HI_X, _HI_W = np.polynomial.legendre.leggauss(21)


def _panel(func, lo, hi):
    # func takes t in [lo, hi] (already including any Jacobian)
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    y_lo = func(mid + half * _LO_X)
    y_hi = func(mid + half * _HI_X)
    if not (np.all(np.isfinite(y_lo)) and np.all(np.isfinite(y_hi))):
        raise EvaluationError(f"integrand not finite on [{lo!r}, {hi!r}]")
    coarse = half * float(np.dot(_LO_W, y_lo))
    fine = half * float(np.dot(_HI_W, y_hi))
    return fine, abs(fine - coarse)


_PANEL_EVALS = len(_LO_X) + len(_HI_X)
_LAPLACE_SPEC = QuadratureSpec(rel_tol=1e-14)
_LAPLACE_BREAKS = (1.0, 4.0, 16.0, 40.0)


def _adaptive(pieces, spec):
    """Global adaptive bisection over a list of (func, lo, hi) panels.

    The worst panel is always split first and ties break on insertion
    order, so the refinement sequence is reproducible. Totals use fsum,
    which is exactly rounded and therefore independent of heap order.
    """
    heap = []
    counter = 0
    for func, lo, hi in pieces:
        val, err = _panel(func, lo, hi)
        heap.append((-err, counter, func, lo, hi, val))
        counter += 1
    heapq.heapify(heap)
    evaluations = _PANEL_EVALS * len(heap)
    splits = 0

    def totals():
        return math.fsum(item[5] for item in heap), math.fsum(-item[0] for item in heap)

    value, error = totals()
    while error > spec.target(value):
        if splits >= spec.max_subdivisions:
            raise ToleranceNotReached(
                f"tolerance not reached after {splits} subdivisions "
                f"(value={value!r}, error={error!r})",
                QuadratureResult(value, error, evaluations),
            )
        _, _, func, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ToleranceNotReached(
                f"panel [{lo!r}, {hi!r}] cannot be bisected further",
                QuadratureResult(value, error, evaluations),
            )
        for a, b in ((lo, mid), (mid, hi)):
            val, err = _panel(func, a, b)
            heapq.heappush(heap, (-err, counter, func, a, b, val))
            counter += 1
        evaluations += 2 * _PANEL_EVALS
        splits += 1
        value, error = totals()
    return QuadratureResult(value, error, evaluations)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
    breakpoints: Sequence[float] = (),
) -> QuadratureResult:
    """Integrate a vectorized ``f`` over the finite interval ``[a, b]``."""
    spec = spec or QuadratureSpec()
    edges = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    pieces = [(f, lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]
    return _adaptive(pieces, spec)


def integrate_semi_infinite(
    f: Callable[[np.ndarray], np.ndarray],
    spec: QuadratureSpec | None = None,
    *,
    breakpoints: Sequence[float] = (),
    scale: float = 1.0,
) -> QuadratureResult:
    """Integrate a vectorized ``f`` over ``[0, inf)``.

    ``breakpoints`` split the axis into finite panels ahead of the tail,
    which starts at the last breakpoint ``b`` and is mapped onto ``[0, 1)``
    by ``nu = b + scale * t/(1 - t)``. Set ``scale`` to the decay length of
    the integrand (``1/k`` for ``exp(-k nu)``); algebraic decay faster than
    ``nu**-2`` needs no tuning.
    """
    spec = spec or QuadratureSpec()
    points = sorted(p for p in breakpoints if p > 0)
    edges = [0.0] + points
    pieces = [(f, lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]
    start = edges[-1]

    if not scale > 0:
        raise ValueError("scale must be > 0")

    def tail(t):
        s = 1.0 - t
        return f(start + scale * t / s) * (scale / (s * s))

    pieces.append((tail, 0.0, 1.0))
    return _adaptive(pieces, spec)
