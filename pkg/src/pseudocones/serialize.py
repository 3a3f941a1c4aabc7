"""JSON-compatible encodings of rationals, polyhedra and lattice elements.

Rationals are strings ``"p/q"`` (``"p"`` when ``q == 1``); vectors are lists
of such strings.  A polyhedron is ``{"dim", "hrep"?, "vrep"?}`` with at least
one representation; when both are given they are checked for consistency.
A lattice element is ``{"dim", "kind", "set"?}``.
"""

from __future__ import annotations

import json
import re
import math
from typing import Any, Dict

from .core import ConvexCone, Kind, PCElem, validate
from .linalg import LinMap, format_rational, parse_rational
from .polyhedra import Halfspace, HRep, Polyhedron, VRep


class FormatError(ValueError):
    """Malformed serialized input."""


def _rat(text):
    if not isinstance(text, str):
        raise FormatError(f"rationals must be strings, got {text!r}")
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _vec(items, dim):
    if not isinstance(items, list) or len(items) != dim:
        raise FormatError(f"expected a list of {dim} rationals, got {items!r}")
    return tuple(_rat(c) for c in items)


def dump_vector(v):
    return [format_rational(c) for c in v]


def dump_scalar(x):
    if x == math.inf:
        return "+inf"
    if x == -math.inf:
        return "-inf"
    return format_rational(x)


def dump_polyhedron(p: Polyhedron, reduce: bool = True) -> Dict[str, Any]:
    """Both representations; redundant facets and generators are dropped unless ``reduce`` is off."""
    if reduce and not p.is_empty:
        p = p.reduced()
    return {
        "dim": p.dim,
        "hrep": [{"normal": dump_vector(h.normal), "offset": format_rational(h.offset)}
                 for h in p.hrep.halfspaces],
        "vrep": {"vertices": [dump_vector(v) for v in p.vrep.vertices],
                 "rays": [dump_vector(r) for r in p.vrep.rays]},
    }


def load_polyhedron(obj: Dict[str, Any]) -> Polyhedron:
    """Parse a polyhedron; raises :class:`FormatError` or InconsistentRepresentation."""
    if not isinstance(obj, dict) or "dim" not in obj:
        raise FormatError("polyhedron needs a 'dim' field")
    n = obj["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"bad dimension {n!r}")
    h = v = None
    if "hrep" in obj:
        if not isinstance(obj["hrep"], list):
            raise FormatError("'hrep' must be a list")
        try:
            h = HRep(n, tuple(Halfspace(_vec(row["normal"], n), _rat(row["offset"])) for row in obj["hrep"]))
        except (KeyError, TypeError):
            raise FormatError("halfspaces need 'normal' and 'offset'") from None
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    if "vrep" in obj:
        rep = obj["vrep"]
        if not isinstance(rep, dict):
            raise FormatError("'vrep' must be an object")
        try:
            v = VRep(n, tuple(_vec(x, n) for x in rep.get("vertices", [])),
                     tuple(_vec(r, n) for r in rep.get("rays", [])))
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    if h is None and v is None:
        raise FormatError("need 'hrep' or 'vrep'")
    if h is not None and v is not None:
        return Polyhedron.from_reps(h, v)
    return Polyhedron(hrep=h, vrep=v)


def dump_element(k: PCElem) -> Dict[str, Any]:
    out: Dict[str, Any] = {"dim": k.dim, "kind": k.kind.value}
    if k.is_cone:
        out["set"] = dump_polyhedron(k.set)
    return out


def load_element(obj: Dict[str, Any]) -> PCElem:
    """Parse a lattice element.  A bare polyhedron object is validated as a cone."""
    if not isinstance(obj, dict) or "dim" not in obj:
        raise FormatError("element needs a 'dim' field")
    if "kind" not in obj:
        return validate(load_polyhedron(obj))
    try:
        kind = Kind(obj["kind"])
    except ValueError:
        raise FormatError(f"unknown kind {obj['kind']!r}") from None
    n = obj["dim"]
    if kind is Kind.EMPTY:
        return PCElem.empty(n)
    if kind is Kind.ALL:
        return PCElem.whole(n)
    if "set" not in obj:
        raise FormatError("cone element needs a 'set'")
    p = load_polyhedron(obj["set"])
    if p.dim != n:
        raise FormatError("element and set dimensions differ")
    return validate(p)


def dump_cone(c: ConvexCone) -> Dict[str, Any]:
    rays = c.polyhedron.reduced().vrep.rays
    return {"dim": c.dim, "vrep": {"vertices": [dump_vector((0,) * c.dim)],
                                   "rays": [dump_vector(r) for r in rays]}}


def load_cone(obj: Dict[str, Any]) -> ConvexCone:
    p = load_polyhedron(obj)
    try:
        return ConvexCone.from_polyhedron(p)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_linmap(obj) -> LinMap:
    if not isinstance(obj, list):
        raise FormatError("a linear map is a list of rows")
    rows = []
    for row in obj:
        if not isinstance(row, list):
            raise FormatError("a linear map is a list of rows")
        rows.append(tuple(_rat(c) for c in row))
    try:
        return LinMap(rows)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps(obj) -> str:
    # one vector per line keeps files readable
    text = json.dumps(obj, indent=2)
    return re.sub(r"\[\s*((?:\"[^\"]*\",?\s*)+)\]",
                  lambda m: "[" + ", ".join(re.findall(r'"[^"]*"', m.group(1))) + "]", text)
