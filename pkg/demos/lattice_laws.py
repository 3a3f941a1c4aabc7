"""
Order-reversing bijections of finite lattices
=============================================

For a bijection of a finite lattice, reversing the order, sending joins to
meets and sending meets to joins are the same condition.  We check this over
every lattice on up to five labeled elements, together with monotonicity of
every lattice endomorphism.
"""

import time

from pseudocones.core import PCElem, join, meet, pc_equal, pc_leq, ray_set
from pseudocones.lattice import FiniteLattice, check_dual_for_lattice, check_lattice_laws, lattice_from_elements, tables_agree

chain = FiniteLattice.chain(3)
print("reverse the chain 0<1<2:", check_dual_for_lattice(chain, (2, 1, 0)))
print("identity on the chain:  ", check_dual_for_lattice(chain, (0, 1, 2)))

t = time.time()
print(check_lattice_laws(4).to_text())
print(f"(sizes up to 4 in {time.time() - t:.2f}s; the acceptance suite goes to 5)")

# A five-element piece of the pseudo-cone lattice is a Boolean square
# with a top added, and its meet and join tables agree with the geometry.
x, y = ray_set((1, 0)), ray_set((0, 1))
elems = [PCElem.empty(2), x, y, join(x, y), PCElem.whole(2)]
lat = lattice_from_elements(elems, pc_leq)
print(lat.to_text())
print("geometric meet/join match the table:", tables_agree(lat, elems, meet, join, pc_equal))
