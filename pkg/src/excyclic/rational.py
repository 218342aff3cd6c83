"""Exact rational scalars, dense matrices and a small multivariate polynomial engine.

Scalars are :class:`fractions.Fraction` (or plain ``int``, which mixes freely
with it).  All elimination kernels clear denominators row by row first and then
run fraction-free (Bareiss) elimination over Python integers, so intermediate
entries stay integral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Number = int | Fraction

__all__ = [
    "Fraction",
    "RatMatrix",
    "DimensionError",
    "to_fraction",
    "rational_to_json",
    "rational_from_json",
    "det",
    "rank",
    "kernel_basis",
    "matmul",
    "transpose",
    "primitive",
    "MultiPoly",
    "poly_det",
    "SignPattern",
    "coefficient_sign_pattern",
]


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; pass a string or Fraction")
    return Fraction(x)


def _simplify(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def rational_to_json(x: Number) -> str:
    x = to_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_json(s) -> Fraction:
    if isinstance(s, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise TypeError(f"cannot parse rational from {s!r}")


@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense matrix of rationals stored row-major."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if data and len({len(r) for r in data}) != 1:
            raise DimensionError("ragged rows")
        object.__setattr__(self, "entries", data)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.entries)) if self.entries else RatMatrix([])

    T = property(transpose)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(matmul(self.entries, other.entries))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[rational_to_json(x) for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "RatMatrix":
        m = cls([[rational_from_json(x) for x in r] for r in obj["entries"]])
        if m.rows != obj.get("rows", m.rows) or (m.rows and m.cols != obj.get("cols", m.cols)):
            raise DimensionError("declared shape does not match entries")
        return m

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "RatMatrix":
        return cls([[0] * c for _ in range(r)])


def _rows(m) -> list[list[Number]]:
    if isinstance(m, RatMatrix):
        return [list(r) for r in m.entries]
    return [list(r) for r in m]


def _integer_rows(rows: list[list[Number]]) -> tuple[list[list[int]], Fraction]:
    """Scale every row to integers; return the rows and the product of scale factors."""
    out = []
    scale = Fraction(1)
    for r in rows:
        dens = [x.denominator for x in r if isinstance(x, Fraction) and x.denominator != 1]
        if dens:
            l = reduce(lcm, dens)
            out.append([int(x * l) for x in r])
            scale *= l
        else:
            out.append([int(x) for x in r])
    return out, scale


def matmul(a, b) -> list[list[Number]]:
    a, b = _rows(a), _rows(b)
    if a and b and len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = list(zip(*b))
    return [[_simplify(sum(x * y for x, y in zip(r, c))) for c in bt] for r in a]


def transpose(m) -> list[list[Number]]:
    return [list(c) for c in zip(*_rows(m))]


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m) -> Number:
    """Exact determinant by fraction-free elimination."""
    rows = _rows(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    ints, scale = _integer_rows(rows)
    return _simplify(Fraction(_bareiss_det(ints)) / scale)


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix (no copying checks, used in hot loops)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return _bareiss_det([list(r) for r in rows])


def _bareiss_rank(a: list[list[int]]) -> int:
    nrows = len(a)
    if nrows == 0:
        return 0
    ncols = len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        arc = a[r][c]
        rr = a[r]
        for i in range(r + 1, nrows):
            ri = a[i]
            aic = ri[c]
            if aic == 0:
                for j in range(c + 1, ncols):
                    ri[j] = ri[j] * arc // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (ri[j] * arc - aic * rr[j]) // prev
            ri[c] = 0
        prev = arc
        r += 1
    return r


def rank(m) -> int:
    """Exact rank via fraction-free Gaussian elimination."""
    rows = _rows(m)
    if not rows or not rows[0]:
        return 0
    ints, _ = _integer_rows(rows)
    return _bareiss_rank(ints)


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return _bareiss_rank([list(r) for r in rows])


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and the pivot columns."""
    a = [[to_fraction(x) for x in r] for r in _rows(m)]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def kernel_basis(m) -> RatMatrix:
    """Rows of the result form a basis of the right kernel of ``m``.

    Each basis vector is scaled to a primitive integer vector.
    """
    rows = _rows(m)
    if not rows:
        raise DimensionError("kernel of a matrix with no rows is ambiguous; pass an explicit shape")
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(primitive(v))
    if not basis:
        return RatMatrix([])
    return RatMatrix(basis)


def primitive(v: Sequence[Number]) -> tuple[int, ...]:
    """Positive rescaling of ``v`` to a coprime integer vector (zero stays zero)."""
    dens = [x.denominator for x in v if isinstance(x, Fraction)]
    l = reduce(lcm, dens, 1)
    ints = [int(x * l) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# Multivariate polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Sparse polynomial with rational coefficients over a fixed variable list.

    Terms are stored as ``{exponent tuple: coefficient}`` with no zero
    coefficients.  Printing uses graded lexicographic order on the declared
    variables.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Number] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.variables):
                raise DimensionError("exponent vector length does not match variables")
            if c != 0:
                clean[tuple(e)] = _simplify(to_fraction(c)) if not isinstance(c, int) else c
        self.terms = clean

    @classmethod
    def constant(cls, variables: Sequence[str], c: Number) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        e = [0] * len(variables)
        e[list(variables).index(name)] = 1
        return cls(variables, {tuple(e): 1})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise DimensionError("polynomials over different variable lists")
            return other
        return MultiPoly.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: dict[tuple[int, ...], Number] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point: Mapping[str, Number] | Sequence[Number]) -> Number:
        if isinstance(point, Mapping):
            vals = [to_fraction(point[v]) for v in self.variables]
        else:
            vals = [to_fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(vals, e):
                if k:
                    term *= x**k
            total += term
        return _simplify(total)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Number]]:
        # graded lex: higher total degree first, then lex on exponents
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_det(m: Sequence[Sequence[MultiPoly | Number]]) -> MultiPoly:
    """Symbolic determinant by Laplace expansion along rows, memoised on column sets."""
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant of a non-square matrix")
    variables = None
    for r in rows:
        for x in r:
            if isinstance(x, MultiPoly):
                if variables is None:
                    variables = x.variables
                elif x.variables != variables:
                    raise DimensionError("entries over different variable lists")
    variables = variables or ()
    rows = [[x if isinstance(x, MultiPoly) else MultiPoly.constant(variables, x) for x in r] for r in rows]
    if n == 0:
        return MultiPoly.constant(variables, 1)

    memo: dict[tuple[int, ...], MultiPoly] = {}

    def minor(cols: tuple[int, ...]) -> MultiPoly:
        # determinant of the last len(cols) rows restricted to cols
        if cols in memo:
            return memo[cols]
        i = n - len(cols)
        if len(cols) == 1:
            res = rows[i][cols[0]]
        else:
            res = MultiPoly(variables)
            for pos, c in enumerate(cols):
                a = rows[i][c]
                if a.is_zero():
                    continue
                sub = minor(cols[:pos] + cols[pos + 1 :])
                term = a * sub
                res = res - term if pos % 2 else res + term
        memo[cols] = res
        return res

    return minor(tuple(range(n)))


class SignPattern(enum.Enum):
    ALL_POSITIVE = "ALL_POSITIVE"
    ALL_NEGATIVE = "ALL_NEGATIVE"
    MIXED = "MIXED"
    ZERO = "ZERO"


def coefficient_sign_pattern(p: MultiPoly) -> SignPattern:
    signs = {c > 0 for c in p.terms.values()}
    if not signs:
        return SignPattern.ZERO
    if signs == {True}:
        return SignPattern.ALL_POSITIVE
    if signs == {False}:
        return SignPattern.ALL_NEGATIVE
    return SignPattern.MIXED


def cofactor_det(m) -> Number:
    """Naive cofactor expansion; an independent reference for :func:`det`."""
    rows = [[to_fraction(x) for x in r] for r in _rows(m)]
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return _simplify(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * to_fraction(cofactor_det(sub))
    return _simplify(total)


def vandermonde_rows(nodes: Sequence[Number], nrows: int) -> list[list[Number]]:
    return [[_simplify(to_fraction(x) ** i) for x in nodes] for i in range(nrows)]
