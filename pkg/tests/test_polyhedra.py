import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pseudocones.linalg import DimensionError, dot, nullspace, rank, sub
from pseudocones.polyhedra import (
    HRep, Halfspace, InconsistentRepresentation, Polyhedron, VRep, contains_point,
    contains_set, convex_hull, dimension, equal, hrep_to_vrep, is_bounded, maximize,
    vrep_to_hrep,
)

from conftest import F, halfplanes


def hset(h):
    return {(hs.normalized().normal, hs.normalized().offset) for hs in h.halfspaces}


def hs(normal, offset):
    return Halfspace(F(*normal), Fraction(offset)).normalized()


# -- conversions ------------------------------------------------------------

def test_vrep_to_hrep_quadrant_shift():
    h = vrep_to_hrep(VRep(2, [F(0, 1)], [F(1, 0), F(0, 1)]))
    assert hset(h) == {(hs((-1, 0), 0).normal, 0), (hs((0, -1), -1).normal, -1)}


def test_vrep_to_hrep_origin():
    h = vrep_to_hrep(VRep(2, [F(0, 0)]))
    assert hset(h) == {(F(1, 0), 0), (F(-1, 0), 0), (F(0, 1), 0), (F(0, -1), 0)}


def test_vrep_to_hrep_cut_quadrant():
    h = vrep_to_hrep(VRep(2, [F(2, 0), F(0, 2)], [F(1, 0), F(0, 1)]))
    assert hset(h) == {(F(-1, -1), -2), (F(-1, 0), 0), (F(0, -1), 0)}


def test_hrep_to_vrep_inverse_example():
    v = hrep_to_vrep(HRep.from_rows(2, [((-1, 0), 0), ((0, -1), -1)]))
    assert set(v.vertices) == {F(0, 1)}
    assert set(v.rays) == {F(1, 0), F(0, 1)}


def test_hrep_to_vrep_infeasible():
    assert hrep_to_vrep(HRep.from_rows(1, [((1,), -1), ((-1,), -1)])).is_empty


def test_hrep_to_vrep_quadrant():
    v = hrep_to_vrep(HRep.from_rows(2, [((-1, 0), 0), ((0, -1), 0)]))
    assert v.vertices == (F(0, 0),)
    assert set(v.rays) == {F(1, 0), F(0, 1)}


def test_empty_vrep_has_canonical_hrep():
    assert hset(vrep_to_hrep(VRep(3))) == {(F(1, 0, 0), -1), (F(-1, 0, 0), -1)}


def test_whole_space_as_lines():
    v = hrep_to_vrep(HRep(2))
    p = Polyhedron(vrep=v)
    assert dimension(p) == 2
    for r in (F(1, 0), F(-1, 0), F(0, 1), F(0, -1)):
        assert any(dot(r, s) > 0 for s in v.rays)


def test_vertex_is_tight_on_n_independent_constraints():
    p = halfplanes(((-1, -1), -2), ((-1, 0), 0), ((0, -1), 0), ((1, 0), 7))
    for x in p.vrep.vertices:
        tight = [h.normal for h in p.hrep.halfspaces if dot(h.normal, x) == h.offset]
        assert rank(tight) == 2


def test_zero_normal_row():
    assert Polyhedron(hrep=HRep.from_rows(2, [((0, 0), -1)])).is_empty
    assert equal(Polyhedron(hrep=HRep.from_rows(2, [((0, 0), 3)])), Polyhedron.whole(2))
    with pytest.raises(ValueError):
        Halfspace(F(0, 0), Fraction(1))


# -- predicates -------------------------------------------------------------

def test_contains_point_examples(K):
    k = K.set
    assert contains_point(k, F(0, 1))
    assert not contains_point(k, F(0, 0))
    assert not contains_point(k, (5, Fraction(1, 2)))
    with pytest.raises(DimensionError):
        contains_point(k, (1, 2, 3))


def test_contains_set_examples(K):
    quad = halfplanes(((-1, 0), 0), ((0, -1), 0))
    assert contains_set(quad, K.set)
    assert not contains_set(K.set, quad)
    assert contains_set(K.set, K.set)


def test_equal_examples(K):
    redundant = halfplanes(((-1, 0), 0), ((0, -1), -1), ((-1, -1), 0))
    assert equal(K.set, redundant)
    assert not equal(K.set, halfplanes(((-1, 0), 0), ((0, -1), 0)))
    assert equal(Polyhedron.empty(2), Polyhedron.empty(2))


def test_dimension_examples(K):
    assert dimension(K.set) == 2
    assert dimension(Polyhedron.from_points([F(1, 0), F(2, 0)])) == 1
    assert dimension(Polyhedron.empty(2)) == -1


def test_is_bounded_examples(K):
    assert is_bounded(Polyhedron.from_points([F(0, 0), F(2, 0), F(0, 2)]))
    assert not is_bounded(K.set)
    assert is_bounded(Polyhedron.empty(2))


def test_maximize(K):
    assert maximize(K.set, (0, -1)) == -1
    assert maximize(K.set, (1, 0)) == float("inf")


def test_from_reps_rejects_inconsistent_pair():
    h = HRep.from_rows(2, [((-1, 0), 0)])
    v = VRep(2, [F(0, 0)], [F(5, 1)])
    with pytest.raises(InconsistentRepresentation) as info:
        Polyhedron.from_reps(h, v)
    assert info.value.generator is not None


# -- brute-force facet oracle -----------------------------------------------

def brute_force_hrep(vertices, rays, n):
    """All halfspaces whose boundary is spanned by n-1 generator directions."""
    dirs = [sub(a, b) for a, b in itertools.combinations(vertices, 2)] + list(rays)
    out = []
    for combo in itertools.combinations(dirs, n - 1):
        for w in nullspace(list(combo), n):
            for a in (w, tuple(-c for c in w)):
                if any(dot(a, r) > 0 for r in rays):
                    continue
                out.append(Halfspace(a, max(dot(a, v) for v in vertices)))
    return HRep(n, tuple(out))


def random_full_dim(rng, n):
    while True:
        verts = [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
                 for _ in range(rng.randint(1, 5))]
        rays = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        rays = [r for r in rays if any(r)]
        p = Polyhedron(vrep=VRep(n, tuple(verts), tuple(rays)))
        if dimension(p) == n:
            return verts, rays, p


def box_grid(n, radius=3):
    steps = [Fraction(i, 2) for i in range(-2 * radius, 2 * radius + 1)]
    return list(itertools.product(steps, repeat=n))


@pytest.mark.parametrize("n", [2, 3])
def test_facets_match_brute_force_oracle(n):
    rng = random.Random(11 + n)
    points = box_grid(n, 3 if n == 2 else 2)
    for _ in range(15 if n == 2 else 6):
        verts, rays, p = random_full_dim(rng, n)
        oracle = brute_force_hrep(verts, rays, n)
        for x in points:
            assert p.hrep.contains(x) == oracle.contains(x)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_round_trip(seed, n):
    rng = random.Random(seed)
    verts = [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
             for _ in range(rng.randint(1, 4))]
    rays = [r for r in (tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)) for _ in range(rng.randint(0, 3)))
            if any(r)]
    p = Polyhedron(vrep=VRep(n, tuple(verts), tuple(rays)))
    assert equal(p, Polyhedron(hrep=vrep_to_hrep(p.vrep)))
    assert equal(p, Polyhedron(vrep=hrep_to_vrep(p.hrep)))
    assert equal(p, p.reduced())


def test_partial_order_on_random_triples():
    rng = random.Random(5)
    polys = [random_full_dim(rng, 2)[2] for _ in range(10)]
    polys += [convex_hull(a, b) for a, b in zip(polys, polys[1:])]
    for p, q, r in itertools.product(polys[:8], repeat=3):
        assert contains_set(p, p)
        if contains_set(p, q) and contains_set(q, p):
            assert equal(p, q)
        if contains_set(p, q) and contains_set(q, r):
            assert contains_set(p, r)


def test_convex_hull_against_sampling():
    # points of the hull are convex combinations of points of the parts
    rng = random.Random(9)
    for _ in range(10):
        _, _, p = random_full_dim(rng, 2)
        _, _, q = random_full_dim(rng, 2)
        hull = convex_hull(p, q)
        assert contains_set(hull, p) and contains_set(hull, q)
        for _ in range(20):
            a = rng.choice(p.vrep.vertices)
            b = rng.choice(q.vrep.vertices)
            t = Fraction(rng.randint(0, 10), 10)
            assert contains_point(hull, tuple(t * x + (1 - t) * y for x, y in zip(a, b)))
        # a hull facet supports some generator of p or q
        for h in hull.hrep.halfspaces:
            assert max(maximize(p, h.normal), maximize(q, h.normal)) == h.offset
