"""Random instances, brute-force oracles and theorem suites.

Every trial is driven by its own integer seed, so any failure can be
replayed exactly with :func:`replay_trial`.
"""

from __future__ import annotations

import contextlib
import dataclasses
import itertools
import json
import random
import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple
from unittest import mock

from . import core
from .core import (
    ConvexCone,
    Kind,
    PCElem,
    apply_gl,
    classical_polar,
    closed_positive_hull,
    dual_star,
    join,
    meet,
    pc_equal,
    pc_leq,
    polar,
    polar_cone,
    radial_support_check,
    recession_cone,
    validate,
)
from .linalg import LinMap, Vector, dot, inverse_transpose, is_zero, neg, rank, scale, vector
from .polyhedra import (
    Halfspace,
    HRep,
    Polyhedron,
    VRep,
    contains_point,
    convex_hull,
    equal,
    intersection,
)
from .serialize import dump_element, dump_vector
from .svg import ccw_vertices


@dataclass(frozen=True)
class GenConfig:
    dim: int
    num_vertices: int = 2
    num_extra_rays: int = 1
    coordinate_bound: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.num_vertices < 1:
            raise ValueError("need at least one vertex")
        if self.num_extra_rays < 0:
            raise ValueError("num_extra_rays must be nonnegative")
        if self.coordinate_bound < 1:
            raise ValueError("coordinate_bound must be at least 1")


# -- generation -------------------------------------------------------------

def _rand_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _rand_vector(rng: random.Random, n: int, bound: int, nonzero_coords=False) -> Vector:
    while True:
        v = tuple(_rand_rational(rng, bound) for _ in range(n))
        if nonzero_coords and any(c == 0 for c in v):
            continue
        if not is_zero(v):
            return v


def pseudocone_from_generators(vertices: Sequence, extra_rays: Sequence = ()) -> PCElem:
    """``conv(vertices) + cone(vertices + extra_rays)``, validated.

    Using every vertex as a ray as well puts ``K`` inside ``rec K``; the
    caller is responsible for keeping ``o`` out of the hull.
    """
    verts = [vector(v) for v in vertices]
    rays = verts + [vector(r) for r in extra_rays]
    return validate(Polyhedron(vrep=VRep(len(verts[0]), tuple(verts), tuple(rays))))


def gen_pseudocone(cfg: GenConfig, rng: Optional[random.Random] = None) -> PCElem:
    """A random pseudo-cone inside ``{<u, x> >= 1}`` for a random ``u``."""
    rng = rng or random.Random(cfg.seed)
    n, b = cfg.dim, cfg.coordinate_bound
    u = _rand_vector(rng, n, b, nonzero_coords=True)
    vertices = []
    while len(vertices) < cfg.num_vertices:
        v = _rand_vector(rng, n, b)
        s = dot(u, v)
        if s == 0:
            continue
        if s < 0:
            v, s = neg(v), -s
        if s < 1:
            v = scale(1 / s, v)
        vertices.append(v)
    extras = []
    while len(extras) < cfg.num_extra_rays:
        r = _rand_vector(rng, n, b)
        extras.append(neg(r) if dot(u, r) < 0 else r)
    return pseudocone_from_generators(vertices, extras)


def _trial_config(cfg: GenConfig, rng: random.Random) -> GenConfig:
    return dataclasses.replace(
        cfg,
        num_vertices=rng.randint(1, cfg.num_vertices),
        num_extra_rays=rng.randint(0, cfg.num_extra_rays),
    )


def random_linmap(rng: random.Random, n: int, bound: int = 3) -> LinMap:
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if rank(rows) == n:
            return LinMap(rows)


def grid(n: int, bound: int, limit: Optional[int] = None, rng: Optional[random.Random] = None) -> List[Vector]:
    """Half-integer lattice points in the box of radius ``2 * bound``.

    With ``limit`` set and a larger grid, a uniform sample of ``limit`` points
    is returned instead.
    """
    steps = range(-4 * bound, 4 * bound + 1)
    total = len(steps) ** n
    if limit is None or total <= limit:
        return [tuple(Fraction(c, 2) for c in p) for p in itertools.product(steps, repeat=n)]
    rng = rng or random.Random(0)
    return [tuple(Fraction(rng.choice(steps), 2) for _ in range(n)) for _ in range(limit)]


def dual_membership_oracle(k: PCElem, x: Sequence) -> bool:
    """``x`` in ``K*`` decided straight from the generators of ``K``."""
    v = k.set.vrep
    return all(dot(x, y) <= -1 for y in v.vertices) and all(dot(x, r) <= 0 for r in v.rays)


def sample_oracle_dual(k: PCElem, points: Sequence[Sequence]) -> List[bool]:
    """Agreement of the oracle with membership in the computed dual, per point."""
    d = dual_star(k)
    return [dual_membership_oracle(k, x) == contains_point(d.set, x) for x in points]


def directions(k: PCElem, rng: random.Random, count: int = 20, bound: int = 8) -> List[Vector]:
    """A mix of directions inside, on the boundary of, and outside ``R_+ K``."""
    v = k.set.vrep
    gens = list(v.vertices) + list(v.rays)
    n = k.dim
    out = []

    def combo(pool):
        w = [Fraction(rng.randint(1, bound)) for _ in pool]
        return tuple(sum(c * g[i] for c, g in zip(w, pool)) for i in range(n))

    kinds = itertools.cycle(["interior", "boundary", "exterior", "random"])
    while len(out) < count:
        kind = next(kinds)
        if kind == "interior":
            d = combo(gens)
        elif kind == "boundary":
            d = rng.choice(gens) if rng.random() < 0.5 else combo(rng.sample(gens, rng.randint(1, len(gens))))
        elif kind == "exterior":
            d = neg(combo(gens))
        else:
            d = _rand_vector(rng, n, bound)
        if not is_zero(d):
            out.append(d)
    return out


# -- reports ----------------------------------------------------------------

@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    total: int = 0
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total


@dataclass
class SuiteReport:
    seed: int
    results: Dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    @property
    def failures(self) -> int:
        return sum(r.total - r.passed for r in self.results.values())

    def record(self, name: str, passed: bool, counterexample: Optional[dict] = None) -> None:
        r = self.results.setdefault(name, PropertyResult(name))
        r.total += 1
        if passed:
            r.passed += 1
        elif r.counterexample is None:
            r.counterexample = counterexample

    def to_text(self) -> str:
        lines = []
        for r in self.results.values():
            lines.append(f"{r.name} {'PASS' if r.ok else 'FAIL'} {r.passed}/{r.total} seed={self.seed}")
            if r.counterexample is not None:
                lines.append("  counterexample " + json.dumps(r.counterexample, sort_keys=True))
        return "\n".join(lines)


def _run_check(report: SuiteReport, name: str, trace: dict, check: Callable[[], bool]) -> None:
    try:
        ok = bool(check())
        err = None
    except Exception as exc:  # a kernel exception during a check is a failure
        ok = False
        err = "".join(traceback.format_exception_only(type(exc), exc)).strip()
    report.record(name, ok, None if ok else dict(trace, property=name, error=err))


# -- duality suite ----------------------------------------------------------

DUALITY_PROPERTIES = (
    "involution",
    "order_reversal",
    "de_morgan_join",
    "de_morgan_meet",
    "recession_identity",
    "cone_swap",
    "gl_equivariance",
    "radial_support",
)


def trial_seed(seed: int, i: int) -> int:
    return (seed * 1_000_003 + i) & 0xFFFF_FFFF_FFFF_FFFF


def _trial_instances(cfg: GenConfig, tseed: int):
    rng = random.Random(tseed)
    k = gen_pseudocone(_trial_config(cfg, rng), rng)
    l = gen_pseudocone(_trial_config(cfg, rng), rng)
    g = random_linmap(rng, cfg.dim)
    return rng, k, l, g


def _check_order_reversal(k, l):
    pairs = [(k, l), (meet(k, l), k), (k, join(k, l))]
    return all(pc_leq(a, b) == pc_leq(dual_star(b), dual_star(a)) for a, b in pairs)


def duality_checks(k: PCElem, l: PCElem, g: LinMap, rng: random.Random) -> Dict[str, Callable[[], bool]]:
    """The per-instance theorem checks, keyed by property name."""
    duals = {}

    def star(x):
        # the same instance's dual is needed by several checks
        key = id(x)
        if key not in duals:
            duals[key] = (x, dual_star(x))
        return duals[key][1]

    return {
        "involution": lambda: pc_equal(dual_star(star(k)), k),
        "order_reversal": lambda: _check_order_reversal(k, l),
        "de_morgan_join": lambda: pc_equal(dual_star(join(k, l)), meet(star(k), star(l))),
        "de_morgan_meet": lambda: pc_equal(dual_star(meet(k, l)), join(star(k), star(l))),
        "recession_identity": lambda: recession_cone(k) == closed_positive_hull(k),
        "cone_swap": lambda: closed_positive_hull(star(k)) == polar_cone(closed_positive_hull(k)),
        "gl_equivariance": lambda: pc_equal(dual_star(apply_gl(g, k)),
                                            apply_gl(inverse_transpose(g), star(k))),
        "radial_support": lambda: all(radial_support_check(k, u, star(k)).holds for u in directions(k, rng)),
    }


def run_duality_suite(cfg: GenConfig, trials: int, properties: Sequence[str] = DUALITY_PROPERTIES) -> SuiteReport:
    """Run the duality theorems on ``trials`` random instance pairs.

    ``cfg.num_vertices`` and ``cfg.num_extra_rays`` are upper bounds; each
    trial draws its own counts.
    """
    report = SuiteReport(cfg.seed)
    for i in range(trials):
        tseed = trial_seed(cfg.seed, i)
        rng, k, l, g = _trial_instances(cfg, tseed)
        trace = {"trial_seed": tseed, "dim": cfg.dim, "K": dump_element(k), "L": dump_element(l),
                 "g": [dump_vector(r) for r in g.entries]}
        checks = duality_checks(k, l, g, rng)
        for name in properties:
            _run_check(report, name, trace, checks[name])
    return report


def replay_trial(cfg: GenConfig, tseed: int):
    """The ``(K, L, g)`` instance a suite trial with seed ``tseed`` used."""
    _, k, l, g = _trial_instances(cfg, tseed)
    return k, l, g


# -- classification statements --------------------------------------------

def run_classification_statement_check(g: LinMap, trials: int, seed: int = 0,
                                       cfg: Optional[GenConfig] = None) -> SuiteReport:
    """``K -> g(K*)`` swaps meet and join; ``K -> gK`` and constants preserve them."""
    cfg = cfg or GenConfig(g.dim, num_vertices=3, num_extra_rays=3, coordinate_bound=8, seed=seed)
    report = SuiteReport(cfg.seed)
    tau = lambda k: apply_gl(g, dual_star(k))
    phi = lambda k: apply_gl(g, k)
    for i in range(trials):
        tseed = trial_seed(cfg.seed, i)
        rng = random.Random(tseed)
        k = gen_pseudocone(_trial_config(cfg, rng), rng)
        l = gen_pseudocone(_trial_config(cfg, rng), rng)
        c = gen_pseudocone(_trial_config(cfg, rng), rng)
        trace = {"trial_seed": tseed, "K": dump_element(k), "L": dump_element(l),
                 "g": [dump_vector(r) for r in g.entries]}
        const = lambda _k: c
        tk, tl, pk, pl = tau(k), tau(l), phi(k), phi(l)
        m, j = meet(k, l), join(k, l)
        checks = {
            "tau_meet_to_join": lambda: pc_equal(tau(m), join(tk, tl)),
            "tau_join_to_meet": lambda: pc_equal(tau(j), meet(tk, tl)),
            "phi_preserves_meet": lambda: pc_equal(phi(m), meet(pk, pl)),
            "phi_preserves_join": lambda: pc_equal(phi(j), join(pk, pl)),
            "constant_is_endomorphism": lambda: (pc_equal(const(meet(k, l)), meet(const(k), const(l)))
                                                 and pc_equal(const(join(k, l)), join(const(k), const(l)))),
        }
        for name, check in checks.items():
            _run_check(report, name, trace, check)
    return report


# -- kernel mutations -------------------------------------------------------

def _star_rows_without_rays(v):
    return [(x, -1) for x in v.vertices]


def _star_rows_plus_one(v):
    return [(x, 1) for x in v.vertices] + [(r, 0) for r in v.rays]


def _hull_without_origin_test(hull):
    return PCElem(Kind.CONE, hull.dim, hull)


MUTATIONS = {
    "drop_ray_constraints": ("_star_rows", _star_rows_without_rays),
    "offset_plus_one": ("_star_rows", _star_rows_plus_one),
    "skip_origin_test": ("_classify_hull", _hull_without_origin_test),
}


@contextlib.contextmanager
def mutation(name: str):
    """Temporarily replace a piece of the kernel with a known-wrong variant."""
    attr, replacement = MUTATIONS[name]
    with mock.patch.object(core, attr, replacement):
        yield


# -- the classical polar counterexample ------------------------------------

def _halfplanes(*rows) -> Polyhedron:
    return Polyhedron.from_inequalities(rows)


def standard_pair() -> Tuple[PCElem, PCElem]:
    """``K = {x >= 0, y >= 1}`` and ``L = {x >= 0, y <= -1}`` in the plane."""
    k = validate(_halfplanes(((-1, 0), 0), ((0, -1), -1)))
    l = validate(_halfplanes(((-1, 0), 0), ((0, 1), -1)))
    return k, l


@dataclass
class CounterexampleReport:
    sets: Dict[str, Polyhedron]
    verdicts: Dict[str, bool]

    def to_text(self) -> str:
        from .serialize import dump_polyhedron

        lines = []
        for name, p in self.sets.items():
            lines.append(f"{name}: " + json.dumps(dump_polyhedron(p)["hrep"]))
        for name, ok in self.verdicts.items():
            lines.append(f"{name}: {ok}")
        return "\n".join(lines)


def demo_polar_counterexample() -> CounterexampleReport:
    """The classical polar fails as a duality on pseudo-cones; ``*`` does not.

    ``K°° = {x >= 0, y >= 0}`` differs from ``K`` while ``K** = K``.  The polar
    also fails to swap the lattice operations on this pair: ``(K v L)°`` is
    ``{o}`` whereas ``K° & L°`` is a ray, and ``(K & L)° = R^2`` whereas the
    closed hull of ``K°`` and ``L°`` is the halfplane ``{x <= 0}``.
    """
    k, l = standard_pair()
    n = 2
    kp, lp = classical_polar(k), classical_polar(l)
    kpp, lpp = polar(kp), polar(lp)
    ks = dual_star(k)
    kss = dual_star(ks)
    ls = dual_star(l)
    lss = dual_star(ls)
    join_kl = join(k, l)
    meet_kl = meet(k, l)
    polar_of_join = polar(Polyhedron.whole(n)) if join_kl.kind is Kind.ALL else polar(join_kl.set)
    polar_of_meet = polar(Polyhedron.empty(n)) if meet_kl.kind is Kind.EMPTY else polar(meet_kl.set)
    meet_polars = intersection(kp, lp)
    hull_polars = convex_hull(kp, lp)
    quadrant = _halfplanes(((-1, 0), 0), ((0, -1), 0))
    lower = _halfplanes(((-1, 0), 0), ((0, 1), 0))
    sets = {
        "K": k.set, "L": l.set,
        "K°": kp, "K°°": kpp, "L°": lp, "L°°": lpp,
        "K*": ks.set, "K**": kss.set, "L*": ls.set, "L**": lss.set,
        "(K∨L)°": polar_of_join, "K°∧L°": meet_polars,
        "(K∧L)°": polar_of_meet, "cl[K°,L°]": hull_polars,
    }
    verdicts = {
        "K°° = first quadrant": equal(kpp, quadrant),
        "K°° = K": equal(kpp, k.set),
        "L°° = {x>=0, y<=0}": equal(lpp, lower),
        "L°° = L": equal(lpp, l.set),
        "K** = K": pc_equal(kss, k),
        "L** = L": pc_equal(lss, l),
        "(K∨L)° = K°∧L°": equal(polar_of_join, meet_polars),
        "(K∧L)° = cl[K°,L°]": equal(polar_of_meet, hull_polars),
        "(K∨L)* = K*∧L*": pc_equal(dual_star(join_kl), meet(ks, ls)),
        "(K∧L)* = K*∨L*": pc_equal(dual_star(meet_kl), join(ks, ls)),
    }
    return CounterexampleReport(sets, verdicts)


# -- C-close instances ------------------------------------------------------

def cclose_cut(c: ConvexCone, u: Sequence, beta) -> PCElem:
    """``C & {<u, x> >= beta}`` for ``u`` interior to the dual cone and ``beta > 0``.

    Those conditions make the removed piece bounded; otherwise ValueError.
    """
    u, beta = vector(u), Fraction(beta)
    if beta <= 0:
        raise ValueError("beta must be positive")
    if not c.rays or any(dot(u, r) <= 0 for r in c.rays):
        raise ValueError("u is not in the interior of the dual cone of C")
    rows = c.polyhedron.hrep.halfspaces + (Halfspace(neg(u), -beta),)
    return validate(Polyhedron(hrep=HRep(c.dim, rows)))


def random_pointed_cone(rng: random.Random, n: int, bound: int) -> ConvexCone:
    while True:
        rays = [tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(n)]
        if rank(rays) == n:
            return ConvexCone(n, rays)


def gen_cclose_instance(cfg: GenConfig, rng: Optional[random.Random] = None, cuts: int = 1):
    """A pointed full-dimensional cone C and a C-close pseudo-cone K inside it.

    K is the meet of ``cuts`` sets ``C & {<u, x> >= beta}`` with ``u`` a
    positive combination of the dual cone's extreme rays.
    """
    if cfg.dim < 2:
        raise ValueError("C-close instances need dimension at least 2")
    rng = rng or random.Random(cfg.seed)
    n, b = cfg.dim, cfg.coordinate_bound
    c = random_pointed_cone(rng, n, b)
    dual_rays = [neg(r) for r in polar_cone(c).rays]
    k = PCElem.whole(n)
    for _ in range(cuts):
        w = [rng.randint(1, b) for _ in dual_rays]
        u = tuple(sum(wi * d[i] for wi, d in zip(w, dual_rays)) for i in range(n))
        beta = Fraction(rng.randint(1, b), rng.randint(1, b))
        k = meet(k, cclose_cut(c, u, beta))
    return c, k


def random_cut_instance(rng: random.Random, n: int, bound: int, cuts: int = 1):
    """A pointed cone and a pseudo-cone ``C & {<u_i, x> >= beta_i}`` with arbitrary ``u_i``.

    These may or may not be C-close; used to cross-check the decision rule.
    """
    while True:
        c = random_pointed_cone(rng, n, bound)
        rows = list(c.polyhedron.hrep.halfspaces)
        for _ in range(cuts):
            u = _rand_vector(rng, n, bound)
            rows.append(Halfspace(neg(u), -Fraction(rng.randint(1, bound))))
        p = Polyhedron(hrep=HRep(n, tuple(rows)))
        if not p.is_empty:
            return c, validate(p)


def polygon_area(p: Polyhedron) -> Fraction:
    """Exact area of a bounded polyhedron in the plane."""
    if p.dim != 2 or p.vrep.rays:
        raise ValueError("area needs a bounded planar polyhedron")
    pts = ccw_vertices(p)
    if len(pts) < 3:
        return Fraction(0)
    twice = sum(a[0] * b[1] - a[1] * b[0] for a, b in zip(pts, pts[1:] + pts[:1]))
    return abs(twice) / 2


def _box(n: int, radius) -> Tuple[Halfspace, ...]:
    rows = []
    for i in range(n):
        e = tuple(Fraction(1 if j == i else 0) for j in range(n))
        rows += [Halfspace(e, radius), Halfspace(neg(e), radius)]
    return tuple(rows)


def clipped_area(p: Polyhedron, radius) -> Fraction:
    return polygon_area(Polyhedron(hrep=HRep(2, p.hrep.halfspaces + _box(2, Fraction(radius)))))


def cclose_area_oracle(c: ConvexCone, k: PCElem) -> bool:
    """Positive finite area of ``C \\ K`` judged from exact areas in growing boxes."""
    coords = [abs(x) for g in c.rays + k.set.vrep.vertices for x in g]
    r = 4 * (max(coords) + 1)
    areas = [clipped_area(c.polyhedron, s * r) - clipped_area(k.set, s * r) for s in (1, 2, 4)]
    return areas[1] == areas[2] and areas[2] > 0
