"""Exact rational scalars, vectors and invertible linear maps.

Scalars are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator, so structural equality is exact equality.
Vectors are plain tuples of fractions.  Nothing in this module (or anything
built on it) takes a tolerance.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")


class DimensionError(ValueError):
    """Raised when operands live in spaces of different dimension."""


def rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently smuggle rounding into the kernel.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"malformed rational {text!r}; expected 'p' or 'p/q'")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(r: Fraction) -> str:
    return str(r)


def vector(coords: Iterable) -> Vector:
    return tuple(rational(c) for c in coords)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def is_zero(v: Sequence) -> bool:
    return all(c == 0 for c in v)


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def dot(a: Sequence, b: Sequence) -> Fraction:
    """Exact standard inner product."""
    _check_dims(a, b)
    # integer accumulation over a common denominator; one normalization at the end
    num, den = 0, 1
    for x, y in zip(a, b):
        if x and y:
            d = x.denominator * y.denominator
            num = num * d + x.numerator * y.numerator * den
            den *= d
    return Fraction(num, den)


def add(a: Sequence, b: Sequence) -> Vector:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vector:
    _check_dims(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(c, v: Sequence) -> Vector:
    c = rational(c)
    return tuple(c * x for x in v)


def neg(v: Sequence) -> Vector:
    return tuple(-x for x in v)


def primitive(v: Sequence) -> Tuple[int, ...]:
    """Positive rescaling of ``v`` to a primitive integer vector.

    The direction (and sign) is preserved; the zero vector maps to itself.
    """
    den = 1
    for c in v:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in v]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g == 0:
        return tuple(ints)
    return tuple(c // g for c in ints)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix given as a list of rows."""
    return len(_echelon([list(map(Fraction, r)) for r in rows])[1])


def _echelon(m):
    """Reduced row echelon form in place; returns (matrix, pivot columns).

    Pivots are taken on the first nonzero entry of each column.
    """
    if not m:
        return m, []
    cols = len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], n: int) -> list:
    """Basis of ``{x : row . x = 0 for every row}`` in Q^n."""
    m, pivots = _echelon([list(map(Fraction, r)) for r in rows])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(tuple(x))
    return basis


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    den = 1
    for row in rows:
        for c in row:
            d = Fraction(c).denominator
            den = den * d // math.gcd(den, d)
    a = [[int(Fraction(c) * den) for c in row] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    if n == 0:
        return Fraction(1)
    return Fraction(sign * a[n - 1][n - 1], den ** n)


class LinMap:
    """An element of GL(n) with exact rational entries.

    Construction rejects non-square or singular matrices, so every
    ``LinMap`` in circulation is invertible.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(vector(r) for r in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("a linear map needs a nonempty square matrix")
        if determinant(rows) == 0:
            raise ValueError("matrix is singular")
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LinMap is immutable")

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls(unit(n, i) for i in range(n))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, LinMap) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.entries)
        return f"LinMap([{rows}])"

    def __matmul__(self, other):
        if isinstance(other, LinMap):
            _check_dims(self.entries, other.entries)
            cols = list(zip(*other.entries))
            return LinMap([[dot(r, c) for c in cols] for r in self.entries])
        return apply(self, other)

    def transpose(self) -> "LinMap":
        return LinMap(zip(*self.entries))

    def inverse(self) -> "LinMap":
        n = self.dim
        aug = [list(r) + list(unit(n, i)) for i, r in enumerate(self.entries)]
        m, _ = _echelon(aug)
        return LinMap(row[n:] for row in m)


def apply(g: LinMap, x: Sequence) -> Vector:
    """Exact matrix-vector product ``g x``."""
    _check_dims(g.entries, x)
    return tuple(dot(row, x) for row in g.entries)


def inverse_transpose(g: LinMap) -> LinMap:
    """``g^{-t}``, the map carrying duals of ``K`` to duals of ``gK``."""
    return g.inverse().transpose()
