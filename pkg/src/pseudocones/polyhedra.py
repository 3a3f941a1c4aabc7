"""Closed convex polyhedra in both H- and V-representation.

A :class:`Polyhedron` may be built from either representation; the other one
is computed on demand by the double description method in :mod:`.dd` via the
usual homogenization ``x -> (x, 1)``.  Redundant constraints or generators are
tolerated everywhere; nothing relies on a canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

from . import dd
from .linalg import DimensionError, Vector, dot, is_zero, rank, sub, unit, vector, zero


class InconsistentRepresentation(ValueError):
    """H- and V-representation supplied together describe different sets."""

    def __init__(self, message, generator=None):
        super().__init__(message)
        self.generator = generator


def _int_row(values: Sequence[Fraction]) -> Tuple[int, ...]:
    den = 1
    for c in values:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return dd._primitive([int(c * den) for c in values])


@dataclass(frozen=True)
class Halfspace:
    """The closed halfspace ``{x : <normal, x> <= offset}``."""

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", vector(self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if is_zero(self.normal):
            raise ValueError("halfspace normal must be nonzero")

    def contains(self, x: Sequence) -> bool:
        return dot(self.normal, x) <= self.offset

    def normalized(self) -> "Halfspace":
        """Positive rescaling with jointly primitive integer coefficients."""
        row = _int_row(list(self.normal) + [self.offset])
        return Halfspace(row[:-1], row[-1])


@dataclass(frozen=True)
class HRep:
    dim: int
    halfspaces: Tuple[Halfspace, ...] = ()

    def __post_init__(self):
        hs = tuple(self.halfspaces)
        if any(len(h.normal) != self.dim for h in hs):
            raise DimensionError("halfspace normal does not match ambient dimension")
        object.__setattr__(self, "halfspaces", hs)

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Tuple[Sequence, object]]) -> "HRep":
        """Build from ``(normal, offset)`` pairs, absorbing zero normals.

        A row ``0 <= b`` is dropped when ``b >= 0``; when ``b < 0`` the whole
        system is infeasible and the canonical empty encoding is returned.
        """
        out = []
        for normal, offset in rows:
            normal, offset = vector(normal), Fraction(offset)
            if len(normal) != dim:
                raise DimensionError("halfspace normal does not match ambient dimension")
            if is_zero(normal):
                if offset < 0:
                    return empty_hrep(dim)
                continue
            out.append(Halfspace(normal, offset))
        return cls(dim, tuple(out))

    def contains(self, x: Sequence) -> bool:
        return all(h.contains(x) for h in self.halfspaces)


def empty_hrep(dim: int) -> HRep:
    e = unit(dim, 0)
    return HRep(dim, (Halfspace(e, -1), Halfspace(tuple(-c for c in e), -1)))


@dataclass(frozen=True)
class VRep:
    """``conv(vertices) + cone(rays)``.

    With no vertices and no rays this is the empty set; with rays but no
    vertices it is ``cone(rays)``, so the origin is inserted as a vertex.
    """

    dim: int
    vertices: Tuple[Vector, ...] = ()
    rays: Tuple[Vector, ...] = ()

    def __post_init__(self):
        verts = tuple(vector(v) for v in self.vertices)
        rays = tuple(vector(r) for r in self.rays)
        if any(len(v) != self.dim for v in verts + rays):
            raise DimensionError("generator does not match ambient dimension")
        if any(is_zero(r) for r in rays):
            raise ValueError("rays must be nonzero")
        if not verts and rays:
            verts = (zero(self.dim),)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rays", rays)

    @property
    def is_empty(self) -> bool:
        return not self.vertices


def vrep_to_hrep(v: VRep) -> HRep:
    """Facet description of ``conv(vertices) + cone(rays)``."""
    n = v.dim
    if v.is_empty:
        return empty_hrep(n)
    gens = [_int_row(list(x) + [Fraction(1)]) for x in v.vertices]
    gens += [_int_row(list(r) + [Fraction(0)]) for r in v.rays]
    halfspaces = []
    seen = set()
    for w in dd.all_generators(gens, n + 1):
        if not any(w[:n]) or w in seen:
            continue
        seen.add(w)
        halfspaces.append(Halfspace(w[:n], -w[n]))
    return HRep(n, tuple(halfspaces))


def hrep_to_vrep(h: HRep) -> VRep:
    """Vertices (one per minimal face) and extreme rays of an H-polyhedron.

    Lines are returned as pairs of opposite rays.  Infeasible systems give
    the empty V-representation.
    """
    n = h.dim
    rows = [_int_row(list(hs.normal) + [-hs.offset]) for hs in h.halfspaces]
    rows.append(tuple([0] * n + [-1]))
    vertices, rays = [], []
    for g in dd.all_generators(rows, n + 1):
        t = g[n]
        if t > 0:
            vertices.append(tuple(Fraction(c, t) for c in g[:n]))
        else:
            rays.append(tuple(Fraction(c) for c in g[:n]))
    if not vertices:
        return VRep(n)
    return VRep(n, tuple(vertices), tuple(rays))


class Polyhedron:
    """A closed convex polyhedron carrying both representations.

    Whichever representation was not supplied is computed lazily.  When both
    are supplied, :meth:`from_reps` checks that they agree.
    """

    def __init__(self, hrep: Optional[HRep] = None, vrep: Optional[VRep] = None):
        if hrep is None and vrep is None:
            raise ValueError("need at least one representation")
        if hrep is not None and vrep is not None and hrep.dim != vrep.dim:
            raise DimensionError("representations disagree on dimension")
        self._hrep = hrep
        self._vrep = vrep

    @classmethod
    def from_hrep(cls, h: HRep) -> "Polyhedron":
        return cls(hrep=h)

    @classmethod
    def from_vrep(cls, v: VRep) -> "Polyhedron":
        return cls(vrep=v)

    @classmethod
    def from_reps(cls, h: HRep, v: VRep) -> "Polyhedron":
        """Both representations, verified to describe the same set."""
        p = cls(hrep=h, vrep=v)
        for x in v.vertices:
            if not h.contains(x):
                raise InconsistentRepresentation("vertex violates the H-representation", x)
        for r in v.rays:
            if any(dot(hs.normal, r) > 0 for hs in h.halfspaces):
                raise InconsistentRepresentation("ray leaves the H-representation", r)
        q = cls(vrep=hrep_to_vrep(h))
        via_v = cls(vrep=v)
        for x in q.vrep.vertices:
            if not via_v.hrep.contains(x):
                raise InconsistentRepresentation("H-representation has a point outside the V-representation", x)
        for r in q.vrep.rays:
            if any(dot(hs.normal, r) > 0 for hs in via_v.hrep.halfspaces):
                raise InconsistentRepresentation("H-representation has a direction outside the V-representation", r)
        return p

    @classmethod
    def empty(cls, dim: int) -> "Polyhedron":
        return cls(hrep=empty_hrep(dim), vrep=VRep(dim))

    @classmethod
    def whole(cls, dim: int) -> "Polyhedron":
        rays = [unit(dim, i) for i in range(dim)] + [tuple(-c for c in unit(dim, i)) for i in range(dim)]
        return cls(hrep=HRep(dim), vrep=VRep(dim, (zero(dim),), tuple(rays)))

    @classmethod
    def from_points(cls, vertices=(), rays=(), dim=None) -> "Polyhedron":
        vertices, rays = [vector(v) for v in vertices], [vector(r) for r in rays]
        if dim is None:
            dim = len((vertices or rays)[0])
        return cls(vrep=VRep(dim, tuple(vertices), tuple(rays)))

    @classmethod
    def from_inequalities(cls, rows, dim=None) -> "Polyhedron":
        """From ``(normal, offset)`` pairs meaning ``<normal, x> <= offset``."""
        rows = list(rows)
        if dim is None:
            dim = len(rows[0][0])
        return cls(hrep=HRep.from_rows(dim, rows))

    @property
    def dim(self) -> int:
        return (self._hrep or self._vrep).dim

    @cached_property
    def hrep(self) -> HRep:
        if self._hrep is not None:
            return self._hrep
        return vrep_to_hrep(self._vrep)

    @cached_property
    def vrep(self) -> VRep:
        if self._vrep is not None:
            return self._vrep
        return hrep_to_vrep(self._hrep)

    @property
    def is_empty(self) -> bool:
        return self.vrep.is_empty

    def reduced(self) -> "Polyhedron":
        """Same set with non-extreme generators and redundant facets dropped."""
        h = vrep_to_hrep(self.vrep)
        return Polyhedron(hrep=h, vrep=hrep_to_vrep(h))

    def __contains__(self, x) -> bool:
        return contains_point(self, x)

    def __repr__(self):
        v = self.vrep
        return f"Polyhedron(dim={self.dim}, vertices={_fmt(v.vertices)}, rays={_fmt(v.rays)})"


def _fmt(vs):
    return "[" + ", ".join("(" + ", ".join(map(str, v)) + ")" for v in vs) + "]"


def _same_dim(p: Polyhedron, q: Polyhedron) -> None:
    if p.dim != q.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {q.dim}")


def contains_point(p: Polyhedron, x: Sequence) -> bool:
    x = vector(x)
    if len(x) != p.dim:
        raise DimensionError(f"point of dimension {len(x)} in a polyhedron of dimension {p.dim}")
    return p.hrep.contains(x)


def contains_set(p: Polyhedron, q: Polyhedron) -> bool:
    """``q`` is a subset of ``p``."""
    _same_dim(p, q)
    h = p.hrep
    return (all(h.contains(x) for x in q.vrep.vertices)
            and all(dot(hs.normal, r) <= 0 for r in q.vrep.rays for hs in h.halfspaces))


def equal(p: Polyhedron, q: Polyhedron) -> bool:
    return contains_set(p, q) and contains_set(q, p)


def dimension(p: Polyhedron) -> int:
    """Affine dimension; -1 for the empty set."""
    v = p.vrep
    if v.is_empty:
        return -1
    base = v.vertices[0]
    return rank([sub(x, base) for x in v.vertices[1:]] + list(v.rays))


def is_bounded(p: Polyhedron) -> bool:
    return not p.vrep.rays


def lineality_rank(p: Polyhedron) -> int:
    """Dimension of the lineality space of a nonempty polyhedron."""
    h = p.hrep
    return p.dim - rank([hs.normal for hs in h.halfspaces]) if h.halfspaces else p.dim


def maximize(p: Polyhedron, u: Sequence):
    """``sup <u, x>`` over ``p``: a Fraction, ``math.inf``, or ``-math.inf`` if empty."""
    u = vector(u)
    v = p.vrep
    if v.is_empty:
        return -math.inf
    if any(dot(u, r) > 0 for r in v.rays):
        return math.inf
    return max(dot(u, x) for x in v.vertices)


def intersection(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    _same_dim(p, q)
    return Polyhedron(hrep=HRep(p.dim, p.hrep.halfspaces + q.hrep.halfspaces))


def convex_hull(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    """Closed convex hull of ``p`` and ``q`` from the union of generators."""
    _same_dim(p, q)
    if p.is_empty:
        return q
    if q.is_empty:
        return p
    a, b = p.vrep, q.vrep
    return Polyhedron(vrep=VRep(p.dim, a.vertices + b.vertices, a.rays + b.rays))
