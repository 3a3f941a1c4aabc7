"""
A tour of the lattice operations
================================

Build a few pseudo-cones, take duals, meets and joins, and watch the
identities hold exactly in rational arithmetic.
"""

from pseudocones.core import (
    closed_positive_hull, dual_star, join, meet, polar_cone, radial, ray_set,
    recession_cone, support,
)
from pseudocones.harness import GenConfig, gen_pseudocone
from pseudocones.linalg import dot

# Half-lines [1, oo) x are the simplest pseudo-cones.
x, y = ray_set((2, 0)), ray_set((0, 2))
T = join(x, y)
print("x v y =", T.set)

# Its dual is a translated quadrant.
print("(x v y)* =", dual_star(T).set)

# De Morgan: the dual of a join is the meet of the duals.
print("(x v y)* = x* & y* ?", dual_star(T) == meet(dual_star(x), dual_star(y)))

# The recession cone and the closed positive hull coincide,
# and the hull of the dual is the polar of the hull.
print("rec T =", recession_cone(T))
print("cone swap holds?", closed_positive_hull(dual_star(T)) == polar_cone(closed_positive_hull(T)))

# The radial function of T and the support function of T* are reciprocal.
for u in [(1, 1), (3, 1), (1, -1)]:
    rho, h = radial(T, u), support(dual_star(T), u)
    print(f"u={u}: rho={rho}, h*={h}", "" if rho is None else f"rho*h = {rho * h}")

# Random instances behave the same way.
K = gen_pseudocone(GenConfig(3, num_vertices=3, num_extra_rays=2, seed=4))
print("random K in R^3 has", len(K.set.vrep.vertices), "vertices;",
      "K** = K ?", dual_star(dual_star(K)) == K)
w = dual_star(K).set.vrep.vertices[0]
print("a vertex of K* pairs with the vertices of K to at most",
      max(dot(w, v) for v in K.set.vrep.vertices))
