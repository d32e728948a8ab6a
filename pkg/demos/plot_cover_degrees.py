"""
Finite covers where a curve becomes simple
==========================================

Connected degree-d covers of the pants are pairs of permutations acting
transitively on d sheets.  We count them, then search them for a cover in
which ``a b^n`` has a simple closed lift.
"""

from simplelift import enumerate_covers, hall_count, min_simple_lift_degree
from simplelift.words import gamma_n

# Counts of connected covers agree with the subgroup-count recursion.
for d in range(1, 6):
    print(d, enumerate_covers(d), hall_count(d))

# The least degree of a cover with a simple lift of a b^n is n + 1.
for n in range(5):
    hit = min_simple_lift_degree(gamma_n(n), cap=n + 1)
    print(gamma_n(n), "degree", hit.degree, hit.witness_record())
