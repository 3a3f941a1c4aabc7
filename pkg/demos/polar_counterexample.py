"""
The classical polar versus the -1 duality
=========================================

Two planar pseudo-cones, one above the x-axis and one below it, show why the
ordinary polar is not an involution on pseudo-cones while ``*`` is.
"""

from pseudocones.harness import demo_polar_counterexample, standard_pair
from pseudocones.core import classical_polar, dual_star, polar
from pseudocones.polyhedra import equal

# K = {x >= 0, y >= 1}
K, L = standard_pair()
print("K  :", K.set)

# Polar twice forgets the offset: we land on the whole first quadrant.
Kpp = polar(classical_polar(K))
print("K°°:", Kpp, " equal to K?", equal(Kpp, K.set))

# The -1 duality brings K back exactly.
Kss = dual_star(dual_star(K))
print("K**:", Kss.set, " equal to K?", equal(Kss.set, K.set))

# The full report also compares how each map treats K v L and K & L.
report = demo_polar_counterexample()
for name, verdict in report.verdicts.items():
    print(f"{name:24s} {verdict}")
