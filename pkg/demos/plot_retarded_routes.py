"""
Retarded energy three ways
==========================

The fourth-order energy with the full field correlator, normalized as
F(r) = -E r**6 / A**2 with r = Omega R / c. The tensor integral, the
reduced one-dimensional integral and the closed form in Si/Ci agree.
"""

import numpy as np

from vdwkit import e4_energy_closed, e4_energy_reduced, e4_energy_tensor
from vdwkit.retarded import asymptote_casimir_polder, e4_energy_static_replacement

for r in np.geomspace(1e-3, 1e3, 7):
    t, red, c = e4_energy_tensor(r), e4_energy_reduced(r), e4_energy_closed(r)
    print(f"r={r:8.3g}  tensor={t:.14f}  reduced={red:.14f}  closed={c:.14f}")

# short distance: 3/4. long distance: r F(r) -> 23/(4 pi)
print("F(1e-4)        =", e4_energy_closed(1e-4))
print("1e4 F(1e4)     =", 1e4 * e4_energy_closed(1e4), " vs", asymptote_casimir_polder())

# freezing the field correlator at zero frequency gives back London for any r
print("static, r=10   =", e4_energy_static_replacement(10.0))
