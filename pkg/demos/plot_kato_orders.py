"""
Perturbation theory order by order
==================================

The same energy rebuilt from Kato's reduced-resolvent formula on a
truncated Fock space. Odd orders vanish, the second order is London's
result and the fourth order is the first one with subtraction terms.
"""

from vdwkit import build_coupled_pair, exact_energy_normal_modes, kato_energy_coefficient
from vdwkit.kato import verify_fourth_order_subtraction

g = 0.1
h0, v = build_coupled_pair(g, n_max=6, channels=3)
print("Fock dimension:", h0.space.dimension)

exact = exact_energy_normal_modes(g).re
partial = 0.0
for n in range(1, 7):
    e_n = kato_energy_coefficient(h0, v, n)
    partial += e_n
    print(f"order {n}:  E_n={e_n: .12e}  partial={partial: .12e}  residual={partial - exact: .3e}")

# fourth order split into the connected chain and the subtraction term
check = verify_fourth_order_subtraction(h0, v)
print(f"direct={check.direct:.12e}  chained={check.chained:.12e}  subtraction={check.subtraction:.12e}")
print("-45/64 g^4 =", -45 / 64 * g**4)
