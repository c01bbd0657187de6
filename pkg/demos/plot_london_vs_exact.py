"""
London energy against the all-orders result
===========================================

Two atoms, each a charge on a spring, interacting through the Coulomb
dipole term only. The London energy is the leading g**2 term; the exact
energy follows from the normal modes, or from a frequency integral.
"""

import numpy as np

from vdwkit import exact_energy_normal_modes, exact_energy_spectral, london_energy

# coupling g = alpha / R**3, energies in units of hbar * Omega
g = np.array([0.01, 0.05, 0.1, 0.2, 0.3, 0.4])

for gi in g:
    exact = exact_energy_spectral(gi)
    modes = exact_energy_normal_modes(gi)
    print(f"g={gi:4.2f}  London={london_energy(gi): .6e}  exact={exact.re: .6e}  "
          f"modes={modes.re: .6e}  ratio={exact.re / london_energy(gi):.6f}")

# the ratio drifts away from 1 like g**2: the next term is -45/64 g**4
from vdwkit import london_series_coefficients

print("series coefficients:", [str(c) for c in london_series_coefficients(8)])
