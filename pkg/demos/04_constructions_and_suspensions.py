"""
Cones, joins and the suspension ladder
=======================================

The non-Hausdorff join places one poset entirely above another.  Two
special cases matter most: the cone (join with a single point above)
and the suspension (join with a two-point antichain above).  Repeated
suspension grows the 2-dimension by exactly 2 per step, which provides
families realizing every large enough value.
"""

from finposet import (
    antichain,
    chain,
    cone,
    hypercube,
    is_contractible,
    join,
    suspension,
    two_dimension,
)

# Joining chains concatenates them.
A = join(chain(2), chain(3))
print("join of chains has height", len(A) - 1)

# The cone adds a top, so it is contractible no matter the base.
C = cone(antichain(3))
print("cone elements:", C.elements)
assert is_contractible(C)

# The suspension of the 2-point antichain is the finite circle; each
# further fold adds two points and two dimensions.
for k in range(3):
    S = suspension(antichain(2), k)
    d = two_dimension(S).value
    print("susp(S0, %d): %d points, 2-dimension %d" % (k, len(S), d))
    assert d == 2 * k + 2 == len(S)

# Same ladder over the 3-point antichain: sizes 2k + 3, dimension
# 2k + 3 as well.
for k in range(2):
    S = suspension(antichain(3), k)
    d = two_dimension(S).value
    print("susp(D3, %d): %d points, 2-dimension %d" % (k, len(S), d))
    assert d == 2 * k + 3 == len(S)

# The hypercube poset itself embeds into itself, so its 2-dimension is
# exactly its coordinate count.
for n in range(1, 4):
    assert two_dimension(hypercube(n)).value == n
print("hypercube(n) has 2-dimension n for n = 1, 2, 3")
