"""Finite lattices, endomorphisms and order-reversing bijections.

Lattices are small explicit tables over the labels ``0..m-1``.  All checks
are exhaustive over pairs, and :func:`labeled_lattices` enumerates every
lattice on ``m`` labeled elements so statements about arbitrary lattices can be
tested over all of them at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

Relation = Tuple[Tuple[bool, ...], ...]


class NotAPartialOrder(ValueError):
    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"{axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


def _as_relation(leq) -> Relation:
    rel = tuple(tuple(bool(x) for x in row) for row in leq)
    if any(len(row) != len(rel) for row in rel):
        raise ValueError("order relation must be a square matrix")
    return rel


def check_partial_order(leq) -> None:
    """Raise :class:`NotAPartialOrder` naming the first failed axiom."""
    rel = _as_relation(leq)
    m = len(rel)
    for z in range(m):
        if not rel[z][z]:
            raise NotAPartialOrder("reflexivity", (z,))
    for a, b in itertools.combinations(range(m), 2):
        if rel[a][b] and rel[b][a]:
            raise NotAPartialOrder("antisymmetry", (a, b))
    for a, b, c in itertools.product(range(m), repeat=3):
        if rel[a][b] and rel[b][c] and not rel[a][c]:
            raise NotAPartialOrder("transitivity", (a, b, c))


def _bound(rel: Relation, x: int, y: int, upper: bool) -> Optional[int]:
    m = len(rel)
    if upper:
        cands = [z for z in range(m) if rel[x][z] and rel[y][z]]
        best = [z for z in cands if all(rel[z][w] for w in cands)]
    else:
        cands = [z for z in range(m) if rel[z][x] and rel[z][y]]
        best = [z for z in cands if all(rel[w][z] for w in cands)]
    return best[0] if best else None


def non_lattice_pair(leq) -> Optional[Tuple[int, int]]:
    """A pair lacking a join or a meet, or None if ``leq`` is a lattice order."""
    check_partial_order(leq)
    rel = _as_relation(leq)
    for x, y in itertools.combinations(range(len(rel)), 2):
        if _bound(rel, x, y, True) is None or _bound(rel, x, y, False) is None:
            return (x, y)
    return None


def is_lattice(leq) -> bool:
    return non_lattice_pair(leq) is None


@dataclass(frozen=True)
class FiniteLattice:
    leq: Relation
    meet: Tuple[Tuple[int, ...], ...]
    join: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_order(cls, leq) -> "FiniteLattice":
        bad = non_lattice_pair(leq)
        if bad is not None:
            raise ValueError(f"elements {bad} have no meet or no join")
        rel = _as_relation(leq)
        r = range(len(rel))
        meet = tuple(tuple(_bound(rel, x, y, False) for y in r) for x in r)
        join = tuple(tuple(_bound(rel, x, y, True) for y in r) for x in r)
        return cls(rel, meet, join)

    @classmethod
    def chain(cls, m: int) -> "FiniteLattice":
        return cls.from_order([[i <= j for j in range(m)] for i in range(m)])

    @classmethod
    def boolean(cls, atoms: int) -> "FiniteLattice":
        m = 1 << atoms
        return cls.from_order([[i & j == i for j in range(m)] for i in range(m)])

    @property
    def size(self) -> int:
        return len(self.leq)

    def to_text(self) -> str:
        rows = [" ".join("1" if b else "0" for b in row) for row in self.leq]
        return "\n".join([str(self.size)] + rows) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FiniteLattice":
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 1:
            raise ValueError("first line must hold the lattice size")
        m = int(lines[0][0])
        rows = lines[1:]
        if len(rows) != m or any(len(r) != m or set(r) - {"0", "1"} for r in rows):
            raise ValueError(f"expected {m} rows of {m} zeros and ones")
        return cls.from_order([[c == "1" for c in r] for r in rows])


def parse_map(text: str) -> Tuple[int, ...]:
    return tuple(int(t) for t in text.split())


def format_map(f: Sequence[int]) -> str:
    return " ".join(map(str, f))


def _check_total(lat: FiniteLattice, f: Sequence[int]) -> None:
    if len(f) != lat.size or any(not 0 <= y < lat.size for y in f):
        raise ValueError("map must send every element to an element")


def endomorphism_violation(lat: FiniteLattice, f: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First pair ``(x, y)``, ``x <= y`` by label, where ``f`` breaks meet or join."""
    _check_total(lat, f)
    mt, jn = lat.meet, lat.join
    for x in range(lat.size):
        for y in range(x, lat.size):
            if f[mt[x][y]] != mt[f[x]][f[y]] or f[jn[x][y]] != jn[f[x]][f[y]]:
                return (x, y)
    return None


def is_endomorphism(lat: FiniteLattice, f: Sequence[int]) -> bool:
    return endomorphism_violation(lat, f) is None


def is_monotone(lat: FiniteLattice, f: Sequence[int]) -> bool:
    le = lat.leq
    return all(le[f[x]][f[y]] for x in range(lat.size) for y in range(lat.size) if le[x][y])


def check_endo_monotone(lat: FiniteLattice, f: Sequence[int]) -> bool:
    """Monotonicity of an endomorphism; it can only fail if the engine is wrong."""
    if not is_endomorphism(lat, f):
        raise ValueError("map is not an endomorphism")
    return is_monotone(lat, f)


def check_dual_for_lattice(lat: FiniteLattice, f: Sequence[int]) -> Tuple[bool, bool, bool]:
    """For a bijection ``f``: (reverses order both ways, sends join to meet, sends meet to join)."""
    _check_total(lat, f)
    if len(set(f)) != lat.size:
        raise ValueError("map is not a bijection")
    r = range(lat.size)
    le, mt, jn = lat.leq, lat.meet, lat.join
    reverses = all(le[x][y] == le[f[y]][f[x]] for x in r for y in r)
    join_to_meet = all(f[jn[x][y]] == mt[f[x]][f[y]] for x in r for y in r)
    meet_to_join = all(f[mt[x][y]] == jn[f[x]][f[y]] for x in r for y in r)
    return reverses, join_to_meet, meet_to_join


def labeled_partial_orders(m: int) -> Iterator[Relation]:
    """Every partial order on ``{0, ..., m-1}``.

    Each unordered pair is unrelated, below, or above; transitivity filters
    the ``3 ** (m choose 2)`` candidates.
    """
    pairs = list(itertools.combinations(range(m), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = [[i == j for j in range(m)] for i in range(m)]
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                rel[a][b] = True
            elif c == 2:
                rel[b][a] = True
        if all(rel[a][c] or not (rel[a][b] and rel[b][c])
               for a in range(m) for b in range(m) for c in range(m)):
            yield tuple(tuple(row) for row in rel)


def labeled_lattices(m: int) -> List[FiniteLattice]:
    return [FiniteLattice.from_order(rel) for rel in labeled_partial_orders(m) if is_lattice(rel)]


def endomorphisms(lat: FiniteLattice) -> Iterator[Tuple[int, ...]]:
    for f in itertools.product(range(lat.size), repeat=lat.size):
        if is_endomorphism(lat, f):
            yield f


def bijections(lat: FiniteLattice) -> Iterator[Tuple[int, ...]]:
    return itertools.permutations(range(lat.size))


@dataclass
class LatticeReport:
    lattices: int = 0
    bijections: int = 0
    dualities: int = 0
    tri_violations: int = 0
    endomorphisms: int = 0
    monotone_violations: int = 0
    first_violation: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.tri_violations == 0 and self.monotone_violations == 0

    def to_text(self) -> str:
        lines = [
            f"dual_for_lattice {'PASS' if self.tri_violations == 0 else 'FAIL'} "
            f"{self.bijections - self.tri_violations}/{self.bijections} lattices={self.lattices} dualities={self.dualities}",
            f"endo_monotone {'PASS' if self.monotone_violations == 0 else 'FAIL'} "
            f"{self.endomorphisms - self.monotone_violations}/{self.endomorphisms}",
        ]
        if self.first_violation is not None:
            lines.append(f"  counterexample {self.first_violation}")
        return "\n".join(lines)


def check_lattice_laws(max_size: int = 5, lattices: Optional[Sequence[FiniteLattice]] = None) -> LatticeReport:
    """Tri-equivalence over all bijections and monotonicity over all endomorphisms."""
    report = LatticeReport()
    if lattices is None:
        lattices = [lat for m in range(1, max_size + 1) for lat in labeled_lattices(m)]
    for lat in lattices:
        report.lattices += 1
        for f in bijections(lat):
            report.bijections += 1
            verdicts = check_dual_for_lattice(lat, f)
            if len(set(verdicts)) != 1:
                report.tri_violations += 1
                report.first_violation = report.first_violation or ("dual_for_lattice", lat.leq, f, verdicts)
            elif verdicts[0]:
                report.dualities += 1
        for f in endomorphisms(lat):
            report.endomorphisms += 1
            if not is_monotone(lat, f):
                report.monotone_violations += 1
                report.first_violation = report.first_violation or ("endo_monotone", lat.leq, f)
    return report


def lattice_from_elements(elements: Sequence, leq) -> FiniteLattice:
    """The finite lattice spanned by ``elements`` under the order ``leq(a, b)``.

    The list must be closed under meet and join for the result to match the
    ambient operations; :func:`tables_agree` checks that.
    """
    return FiniteLattice.from_order([[leq(a, b) for b in elements] for a in elements])


def tables_agree(lat: FiniteLattice, elements: Sequence, meet, join, equal) -> bool:
    """Whether the ambient meet/join reproduce the order-derived tables."""
    r = range(len(elements))
    return all(equal(meet(elements[i], elements[j]), elements[lat.meet[i][j]])
               and equal(join(elements[i], elements[j]), elements[lat.join[i][j]])
               for i in r for j in r)
