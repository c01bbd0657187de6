"""
Where the instantaneous model breaks down
=========================================

Once the coupling exceeds 1/2 the longitudinal normal-mode frequency turns
imaginary and the energy acquires an imaginary part. The two transverse
channels follow at g = 1.
"""

import numpy as np

from vdwkit import ModelParams, exact_energy_normal_modes, exact_energy_spectral, thresholds

for g in np.linspace(0.4, 1.4, 11):
    e = exact_energy_normal_modes(g)
    s = exact_energy_spectral(g)
    print(f"g={g:.2f}  Re E={e.re: .8f}  Im E={e.im: .8f}  (spectral Im {s.im: .8f})")

# separations at which this happens, for unit charge, mass and frequency
r1, r2 = thresholds(ModelParams())
print(f"R1 = (2 alpha)^(1/3) = {r1:.6f}")
print(f"R2 = alpha^(1/3)     = {r2:.6f}")
