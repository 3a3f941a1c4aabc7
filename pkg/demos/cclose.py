"""
Deciding C-closeness
====================

A pseudo-cone K inside a pointed cone C is C-close when C minus K has
positive finite volume.  The decision splits C minus K along the facets of K;
in the plane we compare it with exact clipped areas.
"""

from pseudocones.core import ConvexCone, c_close, validate
from pseudocones.harness import cclose_area_oracle, cclose_cut, clipped_area
from pseudocones.polyhedra import Polyhedron

quadrant = ConvexCone(2, [(1, 0), (0, 1)])

# Cutting with x + y >= 2 removes a triangle of area 2.
K = cclose_cut(quadrant, (1, 1), 2)
print("triangle cut C-close?", c_close(quadrant, K))
for r in (4, 8, 16):
    print(f"  area of (C minus K) in box of radius {r}:",
          clipped_area(quadrant.polyhedron, r) - clipped_area(K.set, r))

# Cutting with x >= 1, y >= 1 removes two infinite strips.
strip = validate(Polyhedron.from_inequalities([((-1, 0), -1), ((0, -1), -1)]))
print("strip C-close?", c_close(quadrant, strip), " area oracle:", cclose_area_oracle(quadrant, strip))
for r in (4, 8, 16):
    print(f"  area in radius {r}:", clipped_area(quadrant.polyhedron, r) - clipped_area(strip.set, r))
