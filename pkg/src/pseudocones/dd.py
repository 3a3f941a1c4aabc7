"""Double description method for homogeneous cones.

Everything here works on integer vectors: a cone ``{y : A y <= 0}`` does not
change when a row of ``A`` is multiplied by a positive scalar, and neither
does a ray, so rational input is first rescaled to primitive integer rows.
"""

from __future__ import annotations

import math
from typing import List, Sequence, Tuple

IntVec = Tuple[int, ...]


def _primitive(v: Sequence[int]) -> IntVec:
    g = 0
    for c in v:
        g = math.gcd(g, c)
    if g <= 1:
        return tuple(v)
    return tuple(c // g for c in v)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [piv * x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def cone_generators(rows: Sequence[Sequence[int]], d: int) -> Tuple[List[IntVec], List[IntVec]]:
    """Generators of ``{y in R^d : a . y <= 0 for every row a}``.

    Returns ``(rays, lines)``: the cone equals ``cone(rays) + span(lines)``,
    where ``lines`` is a basis of the lineality space and ``rays`` are the
    extreme rays modulo lineality.  All vectors are primitive integer tuples.

    Constraints are inserted in lexicographic order.  Two rays are combined
    only when they are adjacent, decided by the rank of the constraints that
    are tight on both.
    """
    lines: List[IntVec] = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    rays: List[IntVec] = []
    zsets: List[int] = []  # bitmask of processed constraints tight on each ray
    processed: List[IntVec] = []

    for a in sorted({_primitive(r) for r in rows}):
        if not any(a):
            continue
        k = len(processed)
        bit = 1 << k
        vals = [_dot(a, l) for l in lines]
        j = next((i for i, v in enumerate(vals) if v != 0), None)
        if j is not None:
            l = lines.pop(j)
            c = vals.pop(j)
            if c > 0:
                l = tuple(-x for x in l)
                c = -c
            # keep a . line = 0 for the remaining lines
            lines = [_primitive([c * x - cm * y for x, y in zip(m, l)])
                     for m, cm in zip(lines, vals)]
            new_rays = []
            for r in rays:
                ar = _dot(a, r)
                new_rays.append(_primitive([-c * x + ar * y for x, y in zip(r, l)]))
            rays = new_rays
            zsets = [z | bit for z in zsets]
            rays.append(l)
            zsets.append((bit - 1))
            processed.append(a)
            continue

        signs = [_dot(a, r) for r in rays]
        pos = [i for i, s in enumerate(signs) if s > 0]
        neg = [i for i, s in enumerate(signs) if s < 0]
        if not pos:
            processed.append(a)
            zsets = [z | bit if s == 0 else z for z, s in zip(zsets, signs)]
            continue
        need = d - len(lines) - 2
        new_rays = []
        new_z = []
        for i, s in enumerate(signs):
            if s < 0:
                new_rays.append(rays[i])
                new_z.append(zsets[i])
            elif s == 0:
                new_rays.append(rays[i])
                new_z.append(zsets[i] | bit)
        for p in pos:
            for q in neg:
                z = zsets[p] & zsets[q]
                if bin(z).count("1") < need:
                    continue
                tight = [processed[t] for t in range(k) if z >> t & 1]
                if int_rank(tight) != need:
                    continue
                sp, sq = signs[p], signs[q]
                ray = _primitive([sp * y - sq * x for x, y in zip(rays[p], rays[q])])
                new_rays.append(ray)
                new_z.append(z | bit)
        rays, zsets = new_rays, new_z
        processed.append(a)

    return rays, lines


def all_generators(rows: Sequence[Sequence[int]], d: int) -> List[IntVec]:
    """Conic generators with each lineality direction doubled as +/- rays."""
    rays, lines = cone_generators(rows, d)
    return rays + lines + [tuple(-x for x in l) for l in lines]
