"""Positive matrices, twisted cyclic column access and the twist map.

A matrix is *positive* when all of its maximal minors, taken on ascending
column sets, are strictly positive.  Columns are labelled 1..n; labels outside
that range wrap around with the sign ``(-1)^(k-1)`` per full period.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .rational import DimensionError, Number, RatMatrix, int_det, det, to_fraction
from .twistor import ExteriorVector, hodge_star, wedge_vectors

__all__ = [
    "PositiveMatrix",
    "NotPositiveError",
    "SplitMix64",
    "vandermonde",
    "random_positive",
    "random_nodes",
    "is_positive",
    "first_nonpositive_minor",
    "column_twisted",
    "twist",
]


class NotPositiveError(ValueError):
    """A maximal minor that should be positive is not; ``minor`` names its columns."""

    def __init__(self, minor: tuple[int, ...], value):
        super().__init__(f"minor on columns {minor} equals {value}, expected > 0")
        self.minor = minor
        self.value = value


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _maximal_minors(cols: Sequence[Sequence[Number]]):
    d = len(cols[0])
    ints = all(isinstance(x, int) for c in cols for x in c)
    for s in combinations(range(len(cols)), d):
        m = [[cols[j][i] for j in s] for i in range(d)]
        yield tuple(j + 1 for j in s), (int_det(m) if ints else det(m))


def first_nonpositive_minor(m) -> tuple[tuple[int, ...], Number] | None:
    cols = m.columns() if isinstance(m, RatMatrix) else [tuple(c) for c in zip(*m)]
    if not cols or len(cols[0]) > len(cols):
        raise DimensionError("positivity needs rows <= cols")
    for s, v in _maximal_minors(cols):
        if v <= 0:
            return s, v
    return None


def is_positive(m) -> bool:
    """True iff every maximal minor on ascending columns is > 0."""
    return first_nonpositive_minor(m) is None


class PositiveMatrix:
    """A validated positive (k+m) x n matrix with twisted cyclic column access."""

    __slots__ = ("data", "d", "n", "_cols")

    def __init__(self, data, validate: bool = True):
        if not isinstance(data, RatMatrix):
            data = RatMatrix(data)
        self.data = data
        self.d, self.n = data.shape
        if self.d > self.n:
            raise DimensionError("a positive matrix needs rows <= cols")
        self._cols = tuple(tuple(_clean(x) for x in c) for c in data.columns())
        if validate:
            bad = first_nonpositive_minor(data)
            if bad is not None:
                raise NotPositiveError(*bad)

    @property
    def k_plus_m(self) -> int:
        return self.d

    def columns(self) -> tuple[tuple[Number, ...], ...]:
        return self._cols

    def column(self, i: int) -> tuple[Number, ...]:
        return self._cols[i - 1]

    def column_twisted(self, i: int, k: int | None) -> tuple[Number, ...]:
        return column_twisted(self, i, k)

    def wedge(self, labels: Sequence[int], k: int | None = None) -> ExteriorVector:
        return wedge_vectors([self.column_twisted(i, k) for i in labels])

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for c in self._cols for x in c)

    def to_json(self) -> dict:
        return self.data.to_json()

    @classmethod
    def from_json(cls, obj) -> "PositiveMatrix":
        return cls(RatMatrix.from_json(obj))

    def __eq__(self, other):
        return isinstance(other, PositiveMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"PositiveMatrix({self.d}x{self.n})"


def column_twisted(z: PositiveMatrix, i: int, k: int | None) -> tuple[Number, ...]:
    """Column i with the rule Z_{n+i} = (-1)^(k-1) Z_i; labels in 1..n need no k."""
    n = z.n
    q, r = divmod(i - 1, n)
    col = z._cols[r]
    if q == 0:
        return col
    if k is None:
        raise ValueError("k is required to wrap column labels outside 1..n")
    if (k - 1) % 2 and q % 2:
        return tuple(-x for x in col)
    return col


def vandermonde(nodes: Sequence, rows: int) -> PositiveMatrix:
    """Rows are the 0th..(rows-1)th powers of strictly increasing nodes."""
    xs = [to_fraction(x) for x in nodes]
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise ValueError("nodes must be strictly increasing")
    if rows > len(xs):
        raise DimensionError("more rows than nodes")
    return PositiveMatrix([[_clean(x**p) for x in xs] for p in range(rows)])


# ---------------------------------------------------------------------------
# Seeded generation
# ---------------------------------------------------------------------------

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator; fully specified so outputs are platform independent."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


def random_nodes(rng: SplitMix64, count: int, denominator: int = 256, span: int = 4096) -> list[Fraction]:
    """Distinct sorted nodes u/denominator with u in 1..span."""
    seen: set[int] = set()
    while len(seen) < count:
        seen.add(1 + rng.below(span))
    return [Fraction(u, denominator) for u in sorted(seen)]


def _lu_no_pivot(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    n = len(a)
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    upper = [list(r) for r in a]
    for c in range(n):
        if upper[c][c] == 0:
            raise ZeroDivisionError("zero pivot in unpivoted LU")
        for r in range(c + 1, n):
            f = upper[r][c] / upper[c][c]
            lower[r][c] = f
            if f:
                upper[r] = [x - f * y for x, y in zip(upper[r], upper[c])]
    return lower, upper


def _primitive_columns(rows: list[list[Fraction]]) -> list[list[int]]:
    """Rescale each column by a positive rational to a coprime integer column."""
    out = []
    for col in zip(*rows):
        den = reduce(lcm, (x.denominator for x in col), 1)
        ints = [int(x * den) for x in col]
        g = reduce(gcd, ints, 0) or 1
        out.append([x // g for x in ints])
    return [list(r) for r in zip(*out)]


def _matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def random_positive(rows: int, cols: int, seed: int, max_attempts: int = 100) -> PositiveMatrix:
    """A reproducible positive rows x cols integer matrix.

    Random nodes give a totally positive square Vandermonde matrix V = L U.
    Writing U = D U1 with D diagonal and U1 unit upper triangular, the matrix
    M = U1^T D L is totally nonnegative and invertible, so the rows x cols
    Vandermonde matrix on the same nodes times M is positive (Cauchy-Binet).
    Unlike a plain Vandermonde matrix its Pluecker point is generic enough
    to avoid the special facet counts of the moment curve.  Each column is
    then rescaled to a coprime integer vector, which keeps positivity and
    every projective construction built from the columns.
    """
    if not 1 <= rows <= cols:
        raise DimensionError("need 1 <= rows <= cols")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        nodes = random_nodes(rng, cols)
        square = [[x**p for x in nodes] for p in range(cols)]
        lower, upper = _lu_no_pivot(square)
        diag = [upper[i][i] for i in range(cols)]
        unit_upper = [[x / diag[i] for x in upper[i]] for i in range(cols)]
        mix = _matmul(
            [[unit_upper[j][i] * diag[j] for j in range(cols)] for i in range(cols)],
            lower,
        )
        z = _matmul(square[:rows], mix)
        cand = _primitive_columns(z)
        if is_positive(cand):
            return PositiveMatrix(cand, validate=False)
    raise RuntimeError(f"no positive matrix after {max_attempts} attempts")


# ---------------------------------------------------------------------------
# Twist
# ---------------------------------------------------------------------------


def twist(z: PositiveMatrix, k: int, m: int) -> PositiveMatrix:
    """Column i of the result is the Hodge star of Z_{i-m+1} ^ ... ^ Z_{i+k-1}.

    Read as a vector, W_i acts on x by W_i . x = det[Z_{i-m+1} ... Z_{i+k-1} x],
    so W_i is the normal of the hyperplane through those k+m-1 columns.
    """
    if z.d != k + m:
        raise DimensionError(f"matrix has {z.d} rows, expected k+m={k + m}")
    cols = []
    for i in range(1, z.n + 1):
        w = wedge_vectors([column_twisted(z, j, k) for j in range(i - m + 1, i + k)])
        cols.append(hodge_star(w).to_list())
    data = [list(r) for r in zip(*cols)]
    bad = first_nonpositive_minor(data)
    if bad is not None:
        raise RuntimeError(f"twist produced a non-positive matrix: {NotPositiveError(*bad)}")
    return PositiveMatrix(data, validate=False)
