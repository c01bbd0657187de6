"""
From R^-6 to R^-7
=================

The normalized energy and its logarithmic slope over six decades of r,
written as an SVG file with both panels.
"""

import sys

from vdwkit import crossover_curve
from vdwkit.retarded import asymptote_casimir_polder, asymptote_london
from vdwkit.svgplot import crossover_svg

curve = crossover_curve(1e-3, 1e3, 97)
for r, f, s in zip(curve.grid[::12], curve.energy[::12], curve.slope[::12]):
    print(f"r={r:9.3g}  F={f:.6e}  slope={s: .5f}")

out = sys.argv[1] if len(sys.argv) > 1 else "crossover.svg"
with open(out, "w") as fh:
    fh.write(crossover_svg(curve.grid, curve.energy, curve.slope, asymptote_london(), asymptote_casimir_polder()))
print("wrote", out)
