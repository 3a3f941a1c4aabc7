import random
from fractions import Fraction

import pytest

from pseudocones import harness
from pseudocones.core import c_close, dual_star, pc_equal, validate, violation
from pseudocones.harness import (
    DUALITY_PROPERTIES, GenConfig, cclose_area_oracle, cclose_cut,
    clipped_area, demo_polar_counterexample, gen_cclose_instance, gen_pseudocone, grid,
    mutation, polygon_area, pseudocone_from_generators, random_cut_instance, replay_trial,
    run_classification_statement_check, run_duality_suite, sample_oracle_dual,
)
from pseudocones.core import ConvexCone
from pseudocones.linalg import LinMap
from pseudocones.polyhedra import Polyhedron, equal

from conftest import F, halfplanes

QUAD = ConvexCone(2, [F(1, 0), F(0, 1)])


def test_generator_examples(K, triangle_cut):
    assert pc_equal(pseudocone_from_generators([F(0, 1)], [F(1, 0)]), K)
    half = pseudocone_from_generators([F(1)])
    assert equal(half.set, halfplanes(((-1,), -1)))
    assert pc_equal(pseudocone_from_generators([F(2, 0), F(0, 2)]), triangle_cut)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_generated_instances_are_pseudocones(n):
    rng = random.Random(n)
    for _ in range(25):
        k = gen_pseudocone(GenConfig(n, num_vertices=3, num_extra_rays=3), rng)
        assert violation(k.set) is None


def test_gen_config_validation():
    with pytest.raises(ValueError):
        GenConfig(0)
    with pytest.raises(ValueError):
        GenConfig(2, num_vertices=0)
    with pytest.raises(ValueError):
        GenConfig(2, coordinate_bound=0)


def test_oracle_examples(K):
    assert sample_oracle_dual(K, [F(0, -1), (0, Fraction(-1, 2)), F(1, -2)]) == [True] * 3
    assert harness.dual_membership_oracle(K, F(0, -1))
    assert not harness.dual_membership_oracle(K, (0, Fraction(-1, 2)))
    assert not harness.dual_membership_oracle(K, F(1, -2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_agrees_on_grid(n):
    rng = random.Random(40 + n)
    pts = grid(n, 2, limit=600, rng=rng)
    for _ in range(8):
        k = gen_pseudocone(GenConfig(n, num_vertices=3, num_extra_rays=2, coordinate_bound=4), rng)
        assert all(sample_oracle_dual(k, pts))


def test_grid_shape():
    pts = grid(1, 2)
    assert len(pts) == 17 and pts[0] == (-4,) and Fraction(1, 2) in [p[0] for p in pts]
    assert len(grid(3, 8, limit=100)) == 100


def test_suite_passes_and_reports():
    report = run_duality_suite(GenConfig(2, num_vertices=4, num_extra_rays=4, seed=7), 15)
    assert report.ok
    lines = report.to_text().splitlines()
    assert lines[0] == "involution PASS 15/15 seed=7"
    assert [ln.split()[0] for ln in lines] == list(DUALITY_PROPERTIES)


def test_zero_trials_gives_empty_counts():
    report = run_duality_suite(GenConfig(2), 0)
    assert report.ok and report.failures == 0


@pytest.mark.parametrize("name", sorted(harness.MUTATIONS))
def test_mutations_are_detected_and_replayable(name):
    cfg = GenConfig(2, num_vertices=4, num_extra_rays=4, seed=3)
    with mutation(name):
        report = run_duality_suite(cfg, 20, ["involution", "de_morgan_join", "de_morgan_meet",
                                             "recession_identity", "cone_swap"])
    assert not report.ok
    first = next(r for r in report.results.values() if not r.ok)
    tseed = first.counterexample["trial_seed"]
    k, l, g = replay_trial(cfg, tseed)
    from pseudocones.serialize import dump_element
    assert dump_element(k) == first.counterexample["K"]
    # the unpatched kernel is fine on the same instance
    assert pc_equal(dual_star(dual_star(k)), k)


def test_mutation_is_undone():
    with mutation("offset_plus_one"):
        pass
    assert run_duality_suite(GenConfig(2, seed=1), 5).ok


def test_drop_ray_constraints_breaks_involution():
    with mutation("drop_ray_constraints"):
        report = run_duality_suite(GenConfig(2, num_vertices=4, num_extra_rays=4), 20, ["involution"])
    assert report.results["involution"].passed < 20
    assert "counterexample" in report.to_text()


def test_classification_statements():
    for g in (LinMap.identity(2), LinMap([[0, 1], [1, 0]]), LinMap([[1, 2, 0], [0, 1, 0], [1, 0, 1]])):
        assert run_classification_statement_check(g, 8, seed=2).ok


def test_demo_counterexample(K):
    rep = demo_polar_counterexample()
    v = rep.verdicts
    assert v["K°° = first quadrant"] and not v["K°° = K"]
    assert v["L°° = {x>=0, y<=0}"] and not v["L°° = L"]
    assert v["K** = K"] and v["L** = L"]
    assert not v["(K∨L)° = K°∧L°"] and not v["(K∧L)° = cl[K°,L°]"]
    assert equal(rep.sets["K**"], K.set)
    assert equal(rep.sets["(K∨L)°"], Polyhedron.from_points([F(0, 0)]))
    assert equal(rep.sets["K°∧L°"], Polyhedron.from_points([F(0, 0)], [F(-1, 0)]))
    assert "K** = K: True" in rep.to_text()


# -- C-close ----------------------------------------------------------------

def test_cclose_cut_examples(triangle_cut):
    assert pc_equal(cclose_cut(QUAD, (1, 1), 2), triangle_cut)
    with pytest.raises(ValueError):
        cclose_cut(QUAD, (1, 0), 1)
    with pytest.raises(ValueError):
        cclose_cut(QUAD, (1, 1), 0)


@pytest.mark.parametrize("n", [2, 3])
def test_generated_cclose_instances(n):
    rng = random.Random(n)
    for cuts in (1, 2):
        for _ in range(5):
            c, k = gen_cclose_instance(GenConfig(n, coordinate_bound=5), rng, cuts=cuts)
            assert violation(k.set) is None
            assert c_close(c, k)


def test_polygon_area_examples():
    assert polygon_area(Polyhedron.from_points([F(0, 0), F(2, 0), F(0, 2)])) == 2
    assert polygon_area(Polyhedron.from_points([F(0, 0), F(3, 0), F(3, 1), F(0, 1), F(1, 0)])) == 3
    assert polygon_area(Polyhedron.from_points([F(0, 0), F(1, 1)])) == 0
    with pytest.raises(ValueError):
        polygon_area(QUAD.polyhedron)


def test_clipped_area_of_quadrant():
    assert clipped_area(QUAD.polyhedron, 5) == 25


def test_area_oracle_examples(triangle_cut):
    assert cclose_area_oracle(QUAD, triangle_cut)
    strip = validate(halfplanes(((-1, 0), -1), ((0, -1), -1)))
    assert not cclose_area_oracle(QUAD, strip)


def test_decision_agrees_with_area_oracle():
    rng = random.Random(17)
    verdicts = []
    for _ in range(30):
        c, k = random_cut_instance(rng, 2, 4, cuts=rng.randint(1, 2))
        verdict = c_close(c, k)
        verdicts.append(verdict)
        assert verdict == cclose_area_oracle(c, k)
    assert any(verdicts) and not all(verdicts)
