"""Exit criteria for the package, shared by ``vdwkit selfcheck`` and the
pytest acceptance module.

Each criterion returns ``(passed, detail)``. Details contain only
deterministic numbers so the report is byte-identical between runs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import instantaneous, kato, oracles, retarded, specfun
from .units import ModelParams


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    check: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class Outcome:
    criterion: Criterion
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.criterion.number:2d} {self.criterion.name}: {self.detail}"


def _rel(a, b):
    return abs(a - b) / abs(b)


def london_constant():
    r = 1e-4
    err = _rel(retarded.e4_energy_closed(r), retarded.asymptote_london())
    return err <= 1e-4, f"rel err {err:.3e} at r={r:g} (tol 1e-4)"


def casimir_polder_constant():
    cp = retarded.asymptote_casimir_polder()
    target = 23.0 / (4.0 * math.pi)
    errs = {r: _rel(r * retarded.e4_energy_closed(r), cp) for r in (100.0, 1000.0)}
    # the asymptote itself must also be the analytic value
    const_ok = _rel(cp, target) <= 1e-15
    ok = const_ok and errs[100.0] <= 1e-2 and errs[1000.0] <= 1e-3
    return ok, (
        f"rel err {errs[100.0]:.3e} at r=100 (tol 1e-2), {errs[1000.0]:.3e} at r=1000 (tol 1e-3)"
        + ("" if const_ok else f"; constant {cp!r} != 23/(4 pi)")
    )


def route_equivalence():
    grid = np.geomspace(1e-3, 1e3, 48)
    red = ten = 0.0
    for r in grid:
        closed = retarded.e4_energy_closed(r)
        red = max(red, _rel(retarded.e4_energy_reduced(r), closed))
        ten = max(ten, _rel(retarded.e4_energy_tensor(r), closed))
    return red <= 1e-8 and ten <= 1e-6, (
        f"max rel reduced-closed {red:.3e} (tol 1e-8), tensor-closed {ten:.3e} (tol 1e-6)"
    )


def slope_crossover():
    curve = retarded.crossover_curve(1e-3, 1e3, 97)
    s = curve.slope
    in_band = bool(np.all((s >= -1.0 - 1e-3) & (s <= 1e-3)))
    monotone = bool(np.all(np.diff(s) <= 0))
    ok = in_band and monotone and s[0] >= -0.01 and s[-1] <= -0.99
    return ok, (
        f"slope(1e-3)={s[0]:.6f} slope(1e3)={s[-1]:.6f} "
        f"band={'ok' if in_band else 'violated'} monotone={'yes' if monotone else 'no'}"
    )


def all_orders_vs_normal_modes():
    worst = 0.0
    for g in (0.05, 0.1, 0.2, 0.4):
        spectral = instantaneous.exact_energy_spectral(g)
        modes = instantaneous.exact_energy_normal_modes(g)
        worst = max(worst, _rel(spectral.re, modes.re), abs(spectral.im))
    return worst <= 1e-10, f"max rel err {worst:.3e} over g in {{0.05,0.1,0.2,0.4}} (tol 1e-10)"


def thresholds():
    problems = []
    for g in np.linspace(0.0, 0.5, 11):
        for e in (instantaneous.exact_energy_spectral(g), instantaneous.exact_energy_normal_modes(g)):
            if e.im != 0.0:
                problems.append(f"im!=0 at g={g:g}")
    for g in (0.6, 0.9):
        for e in (instantaneous.exact_energy_spectral(g), instantaneous.exact_energy_normal_modes(g)):
            if not e.im < 0.0:
                problems.append(f"im>=0 at g={g:g}")

    def im_slope(a, b):
        return (instantaneous.exact_energy_normal_modes(b).im - instantaneous.exact_energy_normal_modes(a).im) / (b - a)

    left, right = im_slope(0.98, 0.99), im_slope(1.01, 1.02)
    if not abs(right - left) > 1.0:
        problems.append(f"no kink at g=1 (slopes {left:.3f}, {right:.3f})")

    p = ModelParams(q=1.3, m=0.7, omega=2.1)
    r1, r2 = instantaneous.thresholds(p)
    alpha = p.alpha
    if _rel(r1, (2 * alpha) ** (1 / 3)) > 1e-14 or _rel(r2, alpha ** (1 / 3)) > 1e-14:
        problems.append("threshold radii")
    if _rel(alpha / r1**3, 0.5) > 1e-14 or _rel(alpha / r2**3, 1.0) > 1e-14:
        problems.append("threshold couplings")
    detail = f"im slope across g=1: {left:.3f} -> {right:.3f}"
    return not problems, detail + ("" if not problems else "; " + ", ".join(problems))


def kato_engine():
    g = 0.1
    h0, v = kato.build_coupled_pair(g, 4, channels=3)
    e = {n: kato.kato_energy_coefficient(h0, v, n) for n in (1, 2, 3, 4)}
    h0_1, v_1 = kato.build_coupled_pair(g, 4, channels=1)
    e4_pair = kato.kato_energy_coefficient(h0_1, v_1, 4)
    errs = {
        "E1": abs(e[1]),
        "E2": _rel(e[2], -0.75 * g**2),
        "E3": abs(e[3]),
        "E4": _rel(e[4], -45 / 64 * g**4),
        "E4pair": _rel(e4_pair, -5 / 128 * g**4),
    }
    tols = {"E1": 1e-14, "E2": 1e-12, "E3": 1e-14, "E4": 1e-10, "E4pair": 1e-10}
    ok = all(errs[k] <= tols[k] for k in errs)
    identity = 0.0
    for ops in ((h0, v), (h0_1, v_1)):
        try:
            chk = kato.verify_fourth_order_subtraction(*ops)
        except ArithmeticError:
            ok = False
            identity = math.inf
            break
        identity = max(identity, abs(chk.direct - (chk.chained - chk.subtraction)))
    ok = ok and identity <= 1e-12
    detail = ", ".join(f"{k} {errs[k]:.1e}" for k in errs) + f", identity {identity:.1e}"
    return ok, detail


def special_functions():
    worst_series = worst_large = worst_ident = 0.0
    for x in np.geomspace(1e-3, 4.0, 64):
        si, ci = oracles.sici_series(x)
        worst_series = max(worst_series, abs(specfun.sine_integral(x) - si), abs(specfun.cosine_integral(x) - ci))
    for x in np.geomspace(4.0, 1e3, 64):
        si, ci = oracles.sici_large(x)
        worst_large = max(worst_large, abs(specfun.sine_integral(x) - si), abs(specfun.cosine_integral(x) - ci))
    for x in np.geomspace(1e-3, 1e3, 64):
        h = 1e-5 * x
        df = (specfun.aux_f(x + h) - specfun.aux_f(x - h)) / (2 * h)
        dg = (specfun.aux_g(x + h) - specfun.aux_g(x - h)) / (2 * h)
        g, f = specfun.aux_g(x), specfun.aux_f(x)
        worst_ident = max(worst_ident, _rel(df, -g), _rel(dg, f - 1.0 / x))
    ok = worst_series <= 1e-12 and worst_large <= 1e-10 and worst_ident <= 1e-6
    return ok, (
        f"series {worst_series:.1e} (tol 1e-12), large-x {worst_large:.1e} (tol 1e-10), "
        f"f'=-g, g'=f-1/x rel {worst_ident:.1e} (tol 1e-6)"
    )


def static_replacement():
    worst = 0.0
    for r in (1e-2, 1.0, 1e2):
        worst = max(worst, _rel(retarded.e4_energy_static_replacement(r), retarded.asymptote_london()))
    # same statement in instantaneous units: -g^2 F equals the London energy
    g = 0.05
    worst = max(worst, _rel(-g * g * retarded.e4_energy_static_replacement(1.0), instantaneous.london_energy(g)))
    return worst <= 1e-10, f"max rel err {worst:.3e} (tol 1e-10)"


def determinism():
    from . import cli

    runs = [
        ["london", "--gmin", "0.01", "--gmax", "1.2", "--points", "7"],
        ["instantaneous", "--gmin", "0.1", "--gmax", "1.5", "--points", "5", "--q", "1.5"],
        ["retarded", "--rmin", "0.01", "--rmax", "100", "--points", "5"],
        ["crossover", "--rmin", "0.001", "--rmax", "1000", "--points", "25"],
        ["crossover", "--points", "17", "--format", "svg"],
        ["kato", "--g", "0.1", "--nmax", "4", "--order", "4"],
    ]
    diffs = [" ".join(argv[:1]) for argv in runs if cli.render(argv) != cli.render(argv)]
    return not diffs, f"{len(runs)} sweeps rendered twice" + (f"; differ: {diffs}" if diffs else ", identical")


CRITERIA = [
    Criterion(1, "london-constant", london_constant),
    Criterion(2, "casimir-polder-constant", casimir_polder_constant),
    Criterion(3, "route-equivalence", route_equivalence),
    Criterion(4, "slope-crossover", slope_crossover),
    Criterion(5, "all-orders-vs-normal-modes", all_orders_vs_normal_modes),
    Criterion(6, "thresholds", thresholds),
    Criterion(7, "kato-engine", kato_engine),
    Criterion(8, "special-functions", special_functions),
    Criterion(9, "static-replacement", static_replacement),
    Criterion(10, "determinism", determinism),
]


def evaluate(criterion: Criterion) -> Outcome:
    try:
        passed, detail = criterion.check()
    except Exception as exc:  # a crash is a failed criterion, not an abort
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    return Outcome(criterion, bool(passed), detail)


def run_all() -> list[Outcome]:
    return [evaluate(c) for c in CRITERIA]


def report(outcomes) -> str:
    lines = [o.line() for o in outcomes]
    passed = sum(o.passed for o in outcomes)
    lines.append(f"{passed}/{len(outcomes)} criteria passed")
    return "\n".join(lines) + "\n"
