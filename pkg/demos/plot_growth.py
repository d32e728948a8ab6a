"""
Degree growth as a function of length
=====================================

Curves of length at most L can need covers of degree linear in L on a
compact surface, and exponential in L once there is a cusp.
"""

import numpy as np

from simplelift import compact_witness, cusped_witness, growth_table, table_to_csv
from simplelift.growth import TooSmallL, find_threshold_n0, length_defect

print(table_to_csv(growth_table(6, exhaustive_cap=4)))

w = compact_witness(120, B=2, eps=0.5, l_alpha=2, l_beta=2, D=1)
print(w)

try:
    compact_witness(5, B=2, eps=0.5, l_alpha=2, l_beta=2, D=1)
except TooSmallL as exc:
    print("too short:", exc.min_L, exc.stable_L)

for L in (10, 20, 30, 40):
    w = cusped_witness(L, eps=1.0, exact=True)
    print(L, w.n, w.length_certificate)

print("threshold for eps = 1:", find_threshold_n0(1.0))
print(length_defect(np.logspace(1, 6, 6)), 2 * np.log(4))
