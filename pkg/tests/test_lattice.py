import itertools

import pytest

from pseudocones.core import PCElem, join, meet, pc_equal, pc_leq, ray_set
from pseudocones.lattice import (
    FiniteLattice, NotAPartialOrder, bijections, check_dual_for_lattice, check_endo_monotone,
    check_lattice_laws, endomorphism_violation, endomorphisms, format_map, is_endomorphism,
    is_lattice, labeled_lattices, labeled_partial_orders, lattice_from_elements, non_lattice_pair,
    parse_map, tables_agree,
)


def test_is_lattice_examples():
    assert is_lattice(FiniteLattice.chain(3).leq)
    vee = [[1, 1, 1], [0, 1, 0], [0, 0, 1]]  # bottom 0 under antichain {1, 2}
    assert not is_lattice(vee)
    assert non_lattice_pair(vee) == (1, 2)
    assert is_lattice(FiniteLattice.boolean(2).leq)


@pytest.mark.parametrize("rel,axiom", [
    ([[0, 0], [0, 1]], "reflexivity"),
    ([[1, 1], [1, 1]], "antisymmetry"),
    ([[1, 1, 0], [0, 1, 1], [0, 0, 1]], "transitivity"),
])
def test_non_posets_rejected(rel, axiom):
    with pytest.raises(NotAPartialOrder) as info:
        is_lattice(rel)
    assert info.value.axiom == axiom


def test_endomorphism_examples():
    chain = FiniteLattice.chain(3)
    assert is_endomorphism(chain, (0, 1, 2))
    assert is_endomorphism(chain, (1, 1, 1))
    assert endomorphism_violation(chain, (0, 2, 1)) == (1, 2)


def test_monotone_examples():
    b = FiniteLattice.boolean(2)
    assert check_endo_monotone(b, (0, 1, 2, 3))
    assert check_endo_monotone(b, (2, 2, 2, 2))
    with pytest.raises(ValueError):
        check_endo_monotone(FiniteLattice.chain(3), (0, 2, 1))


def test_dual_for_lattice_examples():
    chain = FiniteLattice.chain(3)
    assert check_dual_for_lattice(chain, (2, 1, 0)) == (True, True, True)
    assert check_dual_for_lattice(chain, (0, 1, 2)) == (False, False, False)
    with pytest.raises(ValueError):
        check_dual_for_lattice(chain, (0, 0, 1))


def test_counts_of_labeled_structures():
    # labeled posets on 1..4 points: 1, 3, 19, 219
    assert [sum(1 for _ in labeled_partial_orders(m)) for m in range(1, 5)] == [1, 3, 19, 219]
    # labeled lattices: chains (m!) plus, at m = 4, the 12 labelings of the diamond
    assert [len(labeled_lattices(m)) for m in range(1, 5)] == [1, 2, 6, 36]


def test_brute_force_endomorphisms_of_chain():
    # lattice endomorphisms of a chain are exactly the monotone maps
    chain = FiniteLattice.chain(3)
    monotone = [f for f in itertools.product(range(3), repeat=3) if f[0] <= f[1] <= f[2]]
    assert sorted(endomorphisms(chain)) == monotone


def test_laws_exhaustive_small():
    report = check_lattice_laws(4)
    assert report.ok
    assert report.lattices == 45
    assert report.bijections == sum(len(list(bijections(lat))) for m in range(1, 5) for lat in labeled_lattices(m))


def test_text_round_trip():
    b = FiniteLattice.boolean(2)
    assert FiniteLattice.from_text(b.to_text()) == b
    assert parse_map(format_map((3, 1, 2, 0))) == (3, 1, 2, 0)
    with pytest.raises(ValueError):
        FiniteLattice.from_text("3\n1 1\n0 1\n")


def test_pseudocone_sublattice_cross_check():
    # {empty, xbar, ybar, xbar v ybar, R^2} with x, y independent
    n = 2
    xb, yb = ray_set((2, 0)), ray_set((0, 2))
    elems = [PCElem.empty(n), xb, yb, join(xb, yb), PCElem.whole(n)]
    lat = lattice_from_elements(elems, pc_leq)
    assert lat == FiniteLattice.from_order(
        [[1, 1, 1, 1, 1], [0, 1, 0, 1, 1], [0, 0, 1, 1, 1], [0, 0, 0, 1, 1], [0, 0, 0, 0, 1]])
    assert tables_agree(lat, elems, meet, join, pc_equal)


def test_pseudocone_chain_cross_check():
    n = 2
    elems = [PCElem.empty(n), ray_set((0, 3)), ray_set((0, 1)), PCElem.whole(n)]
    lat = lattice_from_elements(elems, pc_leq)
    assert lat == FiniteLattice.chain(4)
    assert tables_agree(lat, elems, meet, join, pc_equal)
