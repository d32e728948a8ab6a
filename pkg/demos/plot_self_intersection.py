"""
Self-intersection of curves on a pair of pants
==============================================

A closed curve on the pair of pants is a cyclic word in the free group on
``a`` and ``b``.  The surface is a one-vertex ribbon graph whose three
boundary walks are the cuffs ``A``, ``b`` and ``aB``.
"""

from simplelift import boundary_walks, invert, pants_base, parse, self_intersection, walk_labels
from simplelift.words import gamma_n

P0 = pants_base()

# The three boundary curves of the pants, read as words.
for walk in boundary_walks(P0):
    print("cuff:", walk_labels(P0, walk))

# The curves a b^n cross themselves exactly n times.
for n in range(8):
    w = gamma_n(n)
    print(f"{str(w):>10}  crossings = {self_intersection(w, P0)}")

# Rotations of a word name the same curve; reversing it keeps the count.
w = parse("bAbbaa")
print(w, self_intersection(w, P0))
print(invert(w), self_intersection(invert(w), P0))
