"""Command-line front end.

Data goes to stdout (or ``--out``), diagnostics to stderr. Exit codes:
0 success, 1 selfcheck failure, 2 invalid configuration, 3 numerical
failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import instantaneous, kato, retarded
from .specfun import QuadratureError, QuadratureSpec
from .svgplot import crossover_svg
from .units import DimlessPoint, ModelParams, from_dimensionless

EXIT_OK, EXIT_SELFCHECK, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3

COMMANDS = ("london", "instantaneous", "retarded", "crossover", "kato", "selfcheck")


class ConfigError(ValueError):
    pass


@dataclass
class SweepTable:
    header: list[str]
    rows: list[list] = field(default_factory=list)

    def add(self, *cells):
        if len(cells) != len(self.header):
            raise ValueError("row width does not match header")
        self.rows.append(list(cells))

    def check_finite(self):
        for row in self.rows:
            for cell in row:
                if isinstance(cell, float) and not math.isfinite(cell):
                    raise QuadratureError(f"non-finite value in row {row}")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([_cell(c) for c in row])
        return buf.getvalue()


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.17g" % value


def _parser():
    p = argparse.ArgumentParser(prog="vdwkit", description="Van der Waals energies of two harmonic atoms.")
    sub = p.add_subparsers(dest="command", required=True)

    def physical(sp):
        for name in ("q", "m", "omega", "hbar", "c"):
            sp.add_argument(f"--{name}", type=float, default=1.0)

    def tolerances(sp):
        sp.add_argument("--rel-tol", type=float, default=1e-12)
        sp.add_argument("--abs-tol", type=float, default=0.0)

    def output(sp, formats=("csv",)):
        sp.add_argument("--out", default=None, help="write data here instead of stdout")
        sp.add_argument("--format", default="csv", choices=("csv", "svg"))
        sp.set_defaults(allowed_formats=formats)

    def g_grid(sp):
        sp.add_argument("--gmin", type=float, default=0.01)
        sp.add_argument("--gmax", type=float, default=1.2)
        sp.add_argument("--points", type=int, default=25)

    def r_grid(sp, points):
        sp.add_argument("--rmin", type=float, default=1e-2)
        sp.add_argument("--rmax", type=float, default=1e2)
        sp.add_argument("--points", type=int, default=points)

    sp = sub.add_parser("london", help="London energy against the all-orders instantaneous energy")
    g_grid(sp), tolerances(sp), output(sp)
    sp = sub.add_parser("instantaneous", help="all-orders instantaneous energy, two routes")
    g_grid(sp), physical(sp), tolerances(sp), output(sp)
    sp = sub.add_parser("retarded", help="fourth-order retarded energy, three routes")
    r_grid(sp, 25), physical(sp), tolerances(sp), output(sp)
    sp = sub.add_parser("crossover", help="normalized energy and log slope, CSV or SVG")
    r_grid(sp, 97), output(sp, ("csv", "svg"))
    sp = sub.add_parser("kato", help="perturbative vacuum energy order by order")
    sp.add_argument("--g", type=float, default=0.1)
    sp.add_argument("--nmax", type=int, default=4)
    sp.add_argument("--order", type=int, default=4)
    sp.add_argument("--channels", type=int, default=3, choices=(1, 3))
    output(sp)
    sub.add_parser("selfcheck", help="run the acceptance criteria")
    return p


def _grid(lo, hi, points, log):
    if points < 1:
        raise ConfigError(f"--points must be >= 1, got {points}")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo > 0 and hi > 0):
        raise ConfigError(f"grid bounds must be finite and > 0, got [{lo}, {hi}]")
    if points == 1:
        if hi < lo:
            raise ConfigError("grid bounds must be ordered")
        return np.array([lo])
    if not lo < hi:
        raise ConfigError(f"grid bounds must satisfy min < max, got [{lo}, {hi}]")
    return np.geomspace(lo, hi, points) if log else np.linspace(lo, hi, points)


def _spec(args):
    try:
        return QuadratureSpec(abs_tol=args.abs_tol, rel_tol=args.rel_tol)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _params(args):
    try:
        return ModelParams(hbar=args.hbar, c=args.c, m=args.m, q=args.q, omega=args.omega)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_london(args) -> SweepTable:
    spec = _spec(args)
    table = SweepTable(["g", "E_london", "E_exact_re", "E_exact_im", "ratio"])
    for g in _grid(args.gmin, args.gmax, args.points, log=False):
        g = float(g)
        el = instantaneous.london_energy(g)
        ex = instantaneous.exact_energy_spectral(g, spec)
        table.add(g, el, ex.re, ex.im, ex.re / el)
    return table


def cmd_instantaneous(args) -> SweepTable:
    p, spec = _params(args), _spec(args)
    table = SweepTable(["g", "R", "E_spectral_re", "E_spectral_im", "E_modes_re", "E_modes_im"])
    for g in _grid(args.gmin, args.gmax, args.points, log=False):
        g = float(g)
        s = instantaneous.exact_energy_spectral(g, spec)
        n = instantaneous.exact_energy_normal_modes(g)
        table.add(g, (p.alpha / g) ** (1.0 / 3.0), s.re, s.im, n.re, n.im)
    return table


def cmd_retarded(args) -> SweepTable:
    p, spec = _params(args), _spec(args)
    table = SweepTable(["r", "R", "F_tensor", "F_reduced", "F_closed", "energy"])
    for r in _grid(args.rmin, args.rmax, args.points, log=True):
        r = float(r)
        R = from_dimensionless(p, DimlessPoint(r, 0.0))
        table.add(
            r, R,
            retarded.e4_energy_tensor(r, spec),
            retarded.e4_energy_reduced(r, spec),
            retarded.e4_energy_closed(r),
            retarded.retarded_energy(p, R),
        )
    return table


def crossover_data(args):
    grid = _grid(args.rmin, args.rmax, args.points, log=True)
    energy = np.array([retarded.e4_energy_closed(float(r)) for r in grid])
    # the one-sided second-order end stencils need three points
    slope = retarded.log_slope(grid, energy) if grid.size >= 3 else None
    return grid, energy, slope


def cmd_crossover(args):
    grid, energy, slope = crossover_data(args)
    london, cp = retarded.asymptote_london(), retarded.asymptote_casimir_polder()
    if args.format == "svg":
        return crossover_svg(grid, energy, slope, london, cp)
    table = SweepTable(["r", "minus_E_r6_over_A2", "slope", "london_asymptote", "cp_asymptote"])
    for i, r in enumerate(grid):
        table.add(float(r), float(energy[i]), None if slope is None else float(slope[i]), london, cp / float(r))
    return table


def cmd_kato(args) -> SweepTable:
    if not 1 <= args.order <= 6:
        raise ConfigError(f"--order must be in [1, 6], got {args.order}")
    if args.nmax < args.order:
        raise ConfigError(f"--nmax ({args.nmax}) must be >= --order ({args.order})")
    if not (math.isfinite(args.g) and args.g >= 0):
        raise ConfigError(f"--g must be finite and >= 0, got {args.g}")
    h0, v = kato.build_coupled_pair(args.g, args.nmax, channels=args.channels)
    if args.channels == 3:
        exact = instantaneous.exact_energy_normal_modes(args.g).re
    else:
        exact = instantaneous.pair_energy(args.g)[0]
    table = SweepTable(["order", "E_n", "partial_sum", "exact_normal_mode", "residual"])
    partial = 0.0
    for n in range(1, args.order + 1):
        e = kato.kato_energy_coefficient(h0, v, n)
        partial += e
        table.add(n, e, partial, exact, partial - exact)
    return table


_HANDLERS = {
    "london": cmd_london,
    "instantaneous": cmd_instantaneous,
    "retarded": cmd_retarded,
    "crossover": cmd_crossover,
    "kato": cmd_kato,
}


def _parse(argv):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:  # --help
            raise
        raise ConfigError("invalid command line") from exc
    if getattr(args, "format", "csv") not in getattr(args, "allowed_formats", ("csv",)):
        raise ConfigError(f"--format {args.format} is only valid for crossover")
    return args


def render(argv) -> str:
    """Output document for a sweep command line, as it would be written."""
    args = _parse(argv)
    if args.command == "selfcheck":
        from . import acceptance

        return acceptance.report(acceptance.run_all())
    result = _HANDLERS[args.command](args)
    if isinstance(result, SweepTable):
        result.check_finite()
        return result.to_csv()
    return result


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _parse(argv)
        if args.command == "selfcheck":
            from . import acceptance

            outcomes = acceptance.run_all()
            sys.stdout.write(acceptance.report(outcomes))
            return EXIT_OK if all(o.passed for o in outcomes) else EXIT_SELFCHECK
        text = render(argv)
        _emit(text, args.out)
    except ConfigError as exc:
        print(f"vdwkit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except QuadratureError as exc:
        print(f"vdwkit: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"vdwkit: cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"vdwkit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ArithmeticError as exc:
        print(f"vdwkit: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
