"""Reference values computed independently of the production paths.

These back the self-check and the test suite. Nothing here shares code
with :mod:`vdwkit.specfun` beyond the standard library.
"""
from __future__ import annotations

import math
from decimal import Decimal, localcontext

_GAMMA = Decimal("0.57721566490153286060651209008240243104215933593992")
_PI = Decimal("3.14159265358979323846264338327950288419716939937510")

ASYMPTOTIC_FROM = 40.0


def _decimal_series(x, digits=60):
    """Si(x), Ci(x) from the Taylor series in ``digits``-digit decimal."""
    with localcontext() as ctx:
        ctx.prec = digits
        X = Decimal(float(x))
        x2 = X * X
        eps = Decimal(10) ** (-digits + 5)
        si = Decimal(0)
        ci = _GAMMA + X.ln()
        odd = X  # x^(2k+1)/(2k+1)!
        even = Decimal(1)  # x^(2k)/(2k)!
        k = 0
        while True:
            si += odd / (2 * k + 1)
            k += 1
            even = -even * x2 / ((2 * k - 1) * (2 * k))
            ci += even / (2 * k)
            odd = -odd * x2 / ((2 * k) * (2 * k + 1))
            if abs(odd) < eps and abs(even) < eps:
                break
        return float(si), float(ci)


def _asymptotic_aux(x):
    """f, g from their asymptotic series truncated at the smallest term."""
    f_terms, g_terms = [], []
    term_f = 1.0 / x
    term_g = 1.0 / (x * x)
    k = 0
    while True:
        f_terms.append(term_f)
        g_terms.append(term_g)
        nxt_f = -term_f * (2 * k + 1) * (2 * k + 2) / (x * x)
        nxt_g = -term_g * (2 * k + 2) * (2 * k + 3) / (x * x)
        if abs(nxt_f) >= abs(term_f) or abs(nxt_f) < 1e-18 * abs(f_terms[0]):
            break
        term_f, term_g = nxt_f, nxt_g
        k += 1
    return math.fsum(f_terms), math.fsum(g_terms)


def sici_series(x):
    """High-precision power series; any x > 0 up to a few tens."""
    return _decimal_series(x)


def sici_large(x):
    """Large-argument reference: the decimal series below
    ``ASYMPTOTIC_FROM`` (where the asymptotic series cannot reach 1e-10),
    the asymptotic expansion above it."""
    if x < ASYMPTOTIC_FROM:
        return _decimal_series(x)
    f, g = _asymptotic_aux(x)
    s, c = math.sin(x), math.cos(x)
    return math.pi / 2 - f * c - g * s, f * s - g * c


def aux_large(x):
    """Asymptotic f(x), g(x) for large x."""
    return _asymptotic_aux(x)


def normal_mode_pair(c):
    """Complex ground-state shift of one bilinearly coupled pair, directly
    from the normal-mode frequencies."""
    import cmath

    # decaying branch for whichever frequency turns imaginary
    roots = [cmath.sqrt(1 + c), cmath.sqrt(1 - c)]
    roots = [z.conjugate() if z.imag > 0 else z for z in roots]
    return 0.5 * (sum(roots) - 2)


def polynomial_exp_moment(coeffs, rate):
    """Exact ``int_0^inf sum c_n nu**n exp(-rate nu) dnu = sum c_n n!/rate**(n+1)``."""
    return math.fsum(c * math.factorial(n) / rate ** (n + 1) for n, c in enumerate(coeffs))
