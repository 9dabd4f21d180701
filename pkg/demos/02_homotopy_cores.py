"""
Beat points, cores and contractibility
=======================================

A beat point is an element whose strict up-set has a minimum (an up
beat point) or whose strict down-set has a maximum (a down beat
point).  Removing a beat point does not change the homotopy type, and
removing beat points until none remain yields the core.  A poset is
contractible exactly when its core is a single point.
"""

import random

from finposet import (
    antichain,
    beat_points,
    build_poset,
    cone,
    core,
    is_contractible,
    is_isomorphic,
    suspension,
)
from finposet.io import format_core_trace

# A zigzag fence: b > d, c > d, a > c.
P = build_poset("abcd", [("d", "b"), ("d", "c"), ("c", "a")])

for w in beat_points(P):
    print("beat point %s (%s), witness %s" % (w.point, w.kind, w.witness))

trace = core(P)
print()
print(format_core_trace(trace))
print("contractible:", is_contractible(P))

# A cone adjoins a new top above everything, so the apex witnesses a
# collapse of the whole space: cones are always contractible.
C = cone(P)
print()
print("cone core size:", len(core(C).core))
assert is_contractible(C)

# The suspension of the two-point antichain is a 4-point circle.  It
# has no beat points at all, so it is its own core.
S = suspension(antichain(2))
print("circle beat points:", beat_points(S))
assert not is_contractible(S)

# The core does not depend on the order in which beat points are
# removed: any two removal orders give isomorphic cores.
orders = [core(C, random.Random(seed)).core for seed in range(5)]
for other in orders[1:]:
    assert is_isomorphic(orders[0], other)
print("cores agree over 5 random removal orders")
