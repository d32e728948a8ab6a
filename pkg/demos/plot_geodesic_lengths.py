"""
Lengths of closed geodesics
===========================

A hyperbolic metric on the pants is a pair of SL(2, R) matrices.  On the
three-punctured sphere the matrices are integral and the curve ``a b^n``
has length ``2 arccosh(1 + 2n)``.
"""

import numpy as np

from simplelift import PantsMetric, geodesic_length, ortho_distance, pants_holonomy
from simplelift.hyperbolic import gamma_n_length_bound, thrice_punctured_holonomy
from simplelift.words import gamma_n

rep = thrice_punctured_holonomy()
ns = np.array([1, 10, 100, 1000, 10 ** 4])
lengths = np.array([geodesic_length(rep, gamma_n(int(n))) for n in ns])
print(np.column_stack([ns, lengths, 2 * np.arccosh(1 + 2 * ns)]))

# On a compact pants the length grows linearly and sits below the bound
# "one cuff, n turns around the other, and the seam twice".
m = PantsMetric(1.0, 2.0, 1.5)
rep = pants_holonomy(m)
D = ortho_distance(m)
for n in (0, 1, 5, 20):
    print(n, geodesic_length(rep, gamma_n(n)), gamma_n_length_bound(m.l1, m.l2, D, n))

# With a cusp in place of the b cuff, growth is only logarithmic.
rep = pants_holonomy(PantsMetric(1.0, 0.0, 1.5))
for n in (10, 1000, 10 ** 5):
    print(n, geodesic_length(rep, gamma_n(n)) - 2 * np.log(n))
