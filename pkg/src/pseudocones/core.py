"""The lattice of closed polyhedral pseudo-cones and its operators.

An element of the lattice is the empty set, the whole space, or a nonempty
closed convex polyhedron ``K`` with ``o not in K`` and ``K`` contained in its
own recession cone.  The duality ``K* = {x : <x, y> <= -1 for all y in K}``
is computed from the generators of ``K``: by linearity the universal
quantifier reduces to ``<x, v> <= -1`` on vertices and ``<x, r> <= 0`` on rays.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .linalg import DimensionError, LinMap, Vector, apply, dot, inverse_transpose, is_zero, vector, zero
from .polyhedra import (
    Halfspace,
    HRep,
    Polyhedron,
    VRep,
    contains_point,
    contains_set,
    convex_hull,
    dimension,
    intersection,
    is_bounded,
    lineality_rank,
    maximize,
)


class Kind(enum.Enum):
    EMPTY = "empty"
    ALL = "all"
    CONE = "cone"


class KernelInvariantError(RuntimeError):
    """An operation produced a value its theory says cannot occur."""


class NotAPseudoCone(ValueError):
    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Violation:
    """Why a polyhedron is not a closed pseudo-cone.

    ``condition`` is one of ``"empty"``, ``"contains_origin"`` or
    ``"not_in_recession_cone"``.  For the last one, ``witness`` is a point of
    ``K`` and ``factor`` a scalar ``> 1`` with ``factor * witness`` outside ``K``.
    """

    condition: str
    witness: Optional[Vector] = None
    factor: Optional[Fraction] = None

    def __str__(self):
        if self.condition == "empty":
            return "set is empty"
        if self.condition == "contains_origin":
            return "set contains the origin"
        w = "(" + ", ".join(map(str, self.witness)) + ")"
        return f"K is not inside rec K: {w} is in K but {self.factor}*{w} is not"


class PCElem:
    """An element of the pseudo-cone lattice in a fixed ambient dimension.

    ``==`` and ``<=`` are set equality and inclusion.
    """

    __slots__ = ("kind", "dim", "set")

    def __init__(self, kind: Kind, dim: int, set: Optional[Polyhedron] = None):
        if (kind is Kind.CONE) != (set is not None):
            raise ValueError("exactly the cone variant carries a polyhedron")
        if set is not None and set.dim != dim:
            raise DimensionError("polyhedron dimension disagrees with element dimension")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "set", set)

    def __setattr__(self, name, value):
        raise AttributeError("PCElem is immutable")

    @classmethod
    def empty(cls, dim: int) -> "PCElem":
        return cls(Kind.EMPTY, dim)

    @classmethod
    def whole(cls, dim: int) -> "PCElem":
        return cls(Kind.ALL, dim)

    @property
    def is_cone(self) -> bool:
        return self.kind is Kind.CONE

    def __eq__(self, other):
        if not isinstance(other, PCElem):
            return NotImplemented
        return pc_equal(self, other)

    __hash__ = None

    def __le__(self, other):
        if not isinstance(other, PCElem):
            return NotImplemented
        return pc_leq(self, other)

    def __ge__(self, other):
        if not isinstance(other, PCElem):
            return NotImplemented
        return pc_leq(other, self)

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __repr__(self):
        if self.set is None:
            return f"PCElem.{'empty' if self.kind is Kind.EMPTY else 'whole'}({self.dim})"
        return f"PCElem.cone({self.set!r})"


class ConvexCone:
    """A closed convex polyhedral cone, stored as ``cone(rays)`` with vertex o."""

    __slots__ = ("dim", "rays", "polyhedron")

    def __init__(self, dim: int, rays: Sequence = (), hrep: Optional[HRep] = None):
        self.dim = dim
        self.rays = tuple(vector(r) for r in rays if not is_zero(r))
        self.polyhedron = Polyhedron(hrep=hrep, vrep=VRep(dim, (zero(dim),), self.rays))

    def __eq__(self, other):
        if not isinstance(other, ConvexCone):
            return NotImplemented
        return contains_set(self.polyhedron, other.polyhedron) and contains_set(other.polyhedron, self.polyhedron)

    __hash__ = None

    def __contains__(self, x):
        return contains_point(self.polyhedron, x)

    def __repr__(self):
        return f"ConvexCone(dim={self.dim}, rays={[tuple(map(str, r)) for r in self.rays]})"

    @classmethod
    def from_polyhedron(cls, p: Polyhedron) -> "ConvexCone":
        """Reinterpret a polyhedron already known to be a cone."""
        if not contains_point(p, zero(p.dim)):
            raise ValueError("a cone must contain the origin")
        c = cls(p.dim, p.vrep.rays)
        if not all(contains_point(c.polyhedron, v) for v in p.vrep.vertices):
            raise ValueError("set is not closed under positive scaling")
        return c

    @property
    def is_pointed(self) -> bool:
        return lineality_rank(self.polyhedron) == 0


def ray_set(x: Sequence) -> PCElem:
    """The half-line ``[1, +inf) x`` for ``x != o``."""
    x = vector(x)
    if is_zero(x):
        raise ValueError("ray set needs a nonzero base point")
    return _unchecked_cone(Polyhedron(vrep=VRep(len(x), (x,), (x,))))


def _unchecked_cone(p: Polyhedron) -> PCElem:
    return PCElem(Kind.CONE, p.dim, p)


def violation(p: Polyhedron) -> Optional[Violation]:
    """The first pseudo-cone condition ``p`` fails, or None."""
    n = p.dim
    if p.is_empty:
        return Violation("empty")
    o = zero(n)
    if contains_point(p, o):
        return Violation("contains_origin", o)
    # rec K = {x : a.x <= 0 for every facet a.x <= b of K}
    for v in p.vrep.vertices:
        for hs in p.hrep.halfspaces:
            av = dot(hs.normal, v)
            if av > 0:
                factor = max(Fraction(2), Fraction(math.floor(hs.offset / av) + 1))
                return Violation("not_in_recession_cone", v, factor)
    return None


def validate(p: Polyhedron) -> PCElem:
    """Wrap ``p`` as a lattice element, raising :class:`NotAPseudoCone` if it is not one."""
    bad = violation(p)
    if bad is not None:
        raise NotAPseudoCone(bad)
    return _unchecked_cone(p)


def _checked_cone(p: Polyhedron, op: str) -> PCElem:
    bad = violation(p)
    if bad is not None:
        raise KernelInvariantError(f"{op} produced a non-pseudo-cone: {bad}")
    return _unchecked_cone(p)


def _same_dim(k: PCElem, l: PCElem) -> None:
    if k.dim != l.dim:
        raise DimensionError(f"dimension mismatch: {k.dim} vs {l.dim}")


def _require_cone(k: PCElem, op: str) -> Polyhedron:
    if not k.is_cone:
        raise ValueError(f"{op} is only defined for pseudo-cones, got {k.kind.value}")
    return k.set


def _star_rows(v: VRep):
    return [(x, -1) for x in v.vertices] + [(r, 0) for r in v.rays]


def star(p: Polyhedron) -> Polyhedron:
    """``{x : <x, y> <= -1 for all y in p}`` for an arbitrary polyhedron."""
    return Polyhedron(hrep=HRep.from_rows(p.dim, _star_rows(p.vrep)))


def polar(p: Polyhedron) -> Polyhedron:
    """Classical polar ``{x : <x, y> <= 1 for all y in p}``."""
    v = p.vrep
    rows = [(x, 1) for x in v.vertices] + [(r, 0) for r in v.rays]
    return Polyhedron(hrep=HRep.from_rows(p.dim, rows))


def dual_star(k: PCElem) -> PCElem:
    if k.kind is Kind.EMPTY:
        return PCElem.whole(k.dim)
    if k.kind is Kind.ALL:
        return PCElem.empty(k.dim)
    d = star(k.set)
    if d.is_empty:
        raise KernelInvariantError("dual of a pseudo-cone came out empty")
    return _checked_cone(d, "dual_star")


def meet(k: PCElem, l: PCElem) -> PCElem:
    """Set intersection."""
    _same_dim(k, l)
    if k.kind is Kind.ALL:
        return l
    if l.kind is Kind.ALL:
        return k
    if k.kind is Kind.EMPTY or l.kind is Kind.EMPTY:
        return PCElem.empty(k.dim)
    p = intersection(k.set, l.set)
    if p.is_empty:
        return PCElem.empty(k.dim)
    return _checked_cone(p, "meet")


def _classify_hull(hull: Polyhedron) -> PCElem:
    if contains_point(hull, zero(hull.dim)):
        return PCElem.whole(hull.dim)
    return _checked_cone(hull, "join")


def join(k: PCElem, l: PCElem) -> PCElem:
    """Closed convex hull, or the whole space when that hull meets the origin."""
    _same_dim(k, l)
    if k.kind is Kind.EMPTY:
        return l
    if l.kind is Kind.EMPTY:
        return k
    if k.kind is Kind.ALL or l.kind is Kind.ALL:
        return PCElem.whole(k.dim)
    return _classify_hull(convex_hull(k.set, l.set))


def pc_leq(k: PCElem, l: PCElem) -> bool:
    _same_dim(k, l)
    if k.kind is Kind.EMPTY or l.kind is Kind.ALL:
        return True
    if k.kind is Kind.ALL or l.kind is Kind.EMPTY:
        return False
    return contains_set(l.set, k.set)


def pc_equal(k: PCElem, l: PCElem) -> bool:
    return pc_leq(k, l) and pc_leq(l, k)


def recession_cone(k: PCElem) -> ConvexCone:
    p = _require_cone(k, "recession_cone")
    return ConvexCone(k.dim, p.vrep.rays)


def closed_positive_hull(k: PCElem) -> ConvexCone:
    """``cl R_+ K``, generated by the vertices and rays of ``K``."""
    p = _require_cone(k, "closed_positive_hull")
    return ConvexCone(k.dim, p.vrep.vertices + p.vrep.rays)


def polar_cone(c: ConvexCone) -> ConvexCone:
    h = HRep.from_rows(c.dim, [(g, 0) for g in c.rays])
    return ConvexCone.from_polyhedron(Polyhedron(hrep=h))


def classical_polar(k: PCElem) -> Polyhedron:
    """Classical polar of a pseudo-cone; it contains o, so it is not a lattice element."""
    return polar(_require_cone(k, "classical_polar"))


def support(k: PCElem, u: Sequence):
    """``sup <u, x>`` over ``K``: a Fraction or ``math.inf``."""
    p = _require_cone(k, "support")
    return maximize(p, u)


def radial(k: PCElem, u: Sequence) -> Optional[Fraction]:
    """``-min{lam >= 0 : lam u in K}``, or None when the ray through u misses K."""
    p = _require_cone(k, "radial")
    u = vector(u)
    if len(u) != k.dim:
        raise DimensionError("direction has the wrong dimension")
    if is_zero(u):
        raise ValueError("radial function is undefined at the origin")
    lo, hi = Fraction(0), None
    for hs in p.hrep.halfspaces:
        c = dot(hs.normal, u)
        if c == 0:
            if hs.offset < 0:
                return None
        elif c > 0:
            t = hs.offset / c
            hi = t if hi is None else min(hi, t)
        else:
            lo = max(lo, hs.offset / c)
    if hi is not None and lo > hi:
        return None
    return -lo


@dataclass(frozen=True)
class RadialSupport:
    """Values entering ``rho_K(u) = 1 / h_{K*}(u)`` and whether it held."""

    support: Union[Fraction, float]
    radial: Optional[Fraction]
    holds: bool


def radial_support_check(k: PCElem, u: Sequence, dual: Optional[PCElem] = None) -> RadialSupport:
    """Check the identity at ``u``; pass ``dual`` to reuse an already computed ``K*``."""
    h = support(dual_star(k) if dual is None else dual, u)
    rho = radial(k, u)
    if h >= 0:
        holds = rho is None
    else:
        holds = rho is not None and rho * h == 1
    return RadialSupport(h, rho, holds)


def apply_gl(g: LinMap, k: PCElem) -> PCElem:
    if g.dim != k.dim:
        raise DimensionError(f"map of dimension {g.dim} applied in dimension {k.dim}")
    if not k.is_cone:
        return k
    v, h = k.set.vrep, k.set.hrep
    image = VRep(k.dim, tuple(apply(g, x) for x in v.vertices), tuple(apply(g, r) for r in v.rays))
    # a.x <= b becomes (g^-T a).y <= b for y = g x
    git = inverse_transpose(g)
    facets = HRep(k.dim, tuple(Halfspace(apply(git, hs.normal), hs.offset) for hs in h.halfspaces))
    return _checked_cone(Polyhedron(hrep=facets, vrep=image), "apply_gl")


def c_close(c: ConvexCone, k: Union[PCElem, Polyhedron]) -> bool:
    """Whether ``C \\ K`` has positive finite volume.

    ``C \\ K`` is covered by the pieces ``C & {<a, x> >= b}`` over the facets
    ``<a, x> <= b`` of ``K``.  The volume is finite iff every piece is bounded
    or lower dimensional, and positive iff some piece is full dimensional.
    """
    if isinstance(k, Polyhedron):
        k = validate(k)
    p = _require_cone(k, "c_close")
    n = c.dim
    if k.dim != n:
        raise DimensionError("cone and set live in different dimensions")
    if not c.is_pointed:
        raise ValueError("C must be pointed")
    if dimension(c.polyhedron) != n:
        raise ValueError("C must have nonempty interior")
    if not contains_set(c.polyhedron, p):
        raise ValueError("K must be contained in C")
    positive = False
    for hs in p.hrep.halfspaces:
        rows = c.polyhedron.hrep.halfspaces + (Halfspace(tuple(-a for a in hs.normal), -hs.offset),)
        piece = Polyhedron(hrep=HRep(n, rows))
        if dimension(piece) < n:
            continue
        if not is_bounded(piece):
            return False
        positive = True
    return positive
