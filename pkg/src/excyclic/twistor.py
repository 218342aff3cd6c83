"""Exterior algebra over Q^d with exact coefficients.

Basis k-vectors ``e_I`` are indexed by strictly ascending 1-based tuples and
every matrix built from them uses lexicographic order on those tuples.  The
pairing ``top_pair(u, v)`` is the coefficient ``B`` in ``u ^ v = B e_{1..d}``;
it is how brackets such as <Y a b> are evaluated for a non-decomposable Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .rational import (
    DimensionError,
    Number,
    RatMatrix,
    det,
    int_det,
    kernel_basis,
    rank,
    rational_from_json,
    rational_to_json,
    to_fraction,
)

__all__ = [
    "ExteriorVector",
    "subsets",
    "shuffle_sign",
    "wedge",
    "wedge_vectors",
    "wedge_power_matrix",
    "wedge_power_columns",
    "bracket",
    "top_pair",
    "hodge_star",
    "dot",
    "factorize",
    "meet",
    "bar_line",
]


@lru_cache(maxsize=None)
def subsets(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Ascending k-subsets of {1..d} in lex order."""
    return tuple(combinations(range(1, d + 1), k))


@lru_cache(maxsize=None)
def subset_position(d: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(subsets(d, k))}


def _perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq``; 0 if it has a repeat."""
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return 0
            if seq[i] > seq[j]:
                s = -s
    return s


@lru_cache(maxsize=None)
def shuffle_sign(first: tuple[int, ...], second: tuple[int, ...]) -> int:
    """Sign of the concatenation ``first + second`` relative to sorted order."""
    return _perm_sign(first + second)


@lru_cache(maxsize=None)
def _complement(d: int, idx: tuple[int, ...]) -> tuple[int, ...]:
    s = set(idx)
    return tuple(i for i in range(1, d + 1) if i not in s)


def _clean(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True, eq=False)
class ExteriorVector:
    """An element of the k-th exterior power of Q^d."""

    degree: int
    dim: int
    coeffs: Mapping[tuple[int, ...], Number]

    def __init__(self, degree: int, dim: int, coeffs: Mapping[Iterable[int], Number] | None = None):
        if not 0 <= degree <= dim:
            raise DimensionError(f"degree {degree} outside 0..{dim}")
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree or any(not 1 <= i <= dim for i in key):
                raise DimensionError(f"bad index {key} for degree {degree} in dimension {dim}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise DimensionError(f"index {key} is not strictly ascending")
            if c != 0:
                clean[key] = _clean(c if isinstance(c, (int, Fraction)) else to_fraction(c))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        if not isinstance(other, ExteriorVector):
            return NotImplemented
        return (self.degree, self.dim, self.coeffs) == (other.degree, other.dim, other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.dim, frozenset(self.coeffs.items())))

    # construction helpers
    @classmethod
    def basis(cls, dim: int, idx: Iterable[int]) -> "ExteriorVector":
        idx = tuple(idx)
        s = _perm_sign(idx)
        return cls(len(idx), dim, {tuple(sorted(idx)): s} if s else {})

    @classmethod
    def from_vector(cls, v: Sequence[Number]) -> "ExteriorVector":
        return cls(1, len(v), {(i + 1,): x for i, x in enumerate(v)})

    @classmethod
    def from_list(cls, degree: int, dim: int, values: Sequence[Number]) -> "ExteriorVector":
        """Inverse of :meth:`to_list` (coefficients in lex order)."""
        keys = subsets(dim, degree)
        if len(values) != len(keys):
            raise DimensionError("coefficient list has the wrong length")
        return cls(degree, dim, dict(zip(keys, values)))

    def to_list(self) -> list[Number]:
        return [self.coeffs.get(s, 0) for s in subsets(self.dim, self.degree)]

    def __getitem__(self, idx) -> Number:
        return self.coeffs.get(tuple(idx), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ExteriorVector") -> "ExteriorVector":
        self._check_same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return ExteriorVector(self.degree, self.dim, out)

    def __neg__(self) -> "ExteriorVector":
        return self.scale(-1)

    def __sub__(self, other: "ExteriorVector") -> "ExteriorVector":
        return self + (-other)

    def scale(self, c: Number) -> "ExteriorVector":
        return ExteriorVector(self.degree, self.dim, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = scale

    def __xor__(self, other: "ExteriorVector") -> "ExteriorVector":
        return wedge(self, other)

    def _check_same(self, other: "ExteriorVector"):
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise DimensionError("exterior vectors of different shape")

    def ratio_to(self, other: "ExteriorVector") -> Fraction | None:
        """The scalar c with self = c * other, or None if not proportional."""
        self._check_same(other)
        if set(self.coeffs) != set(other.coeffs) or not other.coeffs:
            return None
        it = iter(other.coeffs)
        k0 = next(it)
        c = Fraction(self.coeffs[k0]) / other.coeffs[k0]
        for k in it:
            if self.coeffs[k] != c * other.coeffs[k]:
                return None
        return c

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dim": self.dim,
            "coeffs": {",".join(map(str, k)): rational_to_json(v) for k, v in sorted(self.coeffs.items())},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "ExteriorVector":
        coeffs = {}
        for key, val in obj.get("coeffs", {}).items():
            idx = tuple(int(t) for t in key.split(",")) if key else ()
            coeffs[idx] = rational_from_json(val)
        return cls(int(obj["degree"]), int(obj["dim"]), coeffs)


def wedge(u: ExteriorVector, v: ExteriorVector) -> ExteriorVector:
    if u.dim != v.dim:
        raise DimensionError("ambient dimensions differ")
    if u.degree + v.degree > u.dim:
        raise DimensionError("degree overflow in wedge product")
    out: dict[tuple[int, ...], Number] = {}
    for a, x in u.coeffs.items():
        sa = set(a)
        for b, y in v.coeffs.items():
            if sa.intersection(b):
                continue
            s = shuffle_sign(a, b)
            key = tuple(sorted(a + b))
            out[key] = out.get(key, 0) + s * x * y
    return ExteriorVector(u.degree + v.degree, u.dim, out)


def _minor(cols: Sequence[Sequence[Number]], rows: tuple[int, ...]) -> Number:
    """Determinant of the square matrix with the given columns restricted to ``rows`` (0-based)."""
    m = [[c[r] for c in cols] for r in rows]
    if all(isinstance(x, int) for row in m for x in row):
        return int_det(m)
    return det(m)


def wedge_vectors(vectors: Sequence[Sequence[Number]]) -> ExteriorVector:
    """Z_{a1} ^ ... ^ Z_{ar} as an exterior vector (coefficients are maximal minors)."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise DimensionError("need at least one vector")
    d = len(vectors[0])
    r = len(vectors)
    if r > d:
        raise DimensionError("more vectors than the ambient dimension")
    return ExteriorVector(r, d, {s: _minor(vectors, tuple(i - 1 for i in s)) for s in subsets(d, r)})


def _columns(z) -> list[tuple[Number, ...]]:
    if hasattr(z, "columns") and callable(getattr(z, "columns")):
        return list(z.columns())
    if hasattr(z, "cols_list"):
        return list(z.cols_list)
    if isinstance(z, RatMatrix):
        return z.columns()
    return [tuple(c) for c in zip(*z)]


def wedge_power_matrix(z, k: int) -> RatMatrix:
    """The C(d,k) x C(n,k) matrix whose column I holds the coefficients of Z_{i1} ^ ... ^ Z_{ik}."""
    cols = _columns(z)
    d = len(cols[0])
    n = len(cols)
    if not 1 <= k <= d:
        raise DimensionError(f"k={k} outside 1..{d}")
    rows_idx = [tuple(i - 1 for i in s) for s in subsets(d, k)]
    out_cols = []
    for s in subsets(n, k):
        vs = [cols[i - 1] for i in s]
        out_cols.append([_minor(vs, r) for r in rows_idx])
    return RatMatrix(zip(*out_cols))


def wedge_power_columns(z, k: int) -> list[tuple[int, ...]]:
    """Columns of the k-th wedge power as tuples (lex over k-subsets of columns)."""
    cols = _columns(z)
    d = len(cols[0])
    rows_idx = [tuple(i - 1 for i in s) for s in subsets(d, k)]
    return [tuple(_minor([cols[i - 1] for i in s], r) for r in rows_idx) for s in subsets(len(cols), k)]


def bracket(z, items: Sequence, k: int | None = None) -> Number:
    """Determinant of stacked items: integer labels pick (twisted) columns of ``z``, sequences are used as is.

    Integer labels outside 1..n need ``k`` for the twisted cyclic sign.
    """
    vectors = []
    for it in items:
        if isinstance(it, int):
            if hasattr(z, "column_twisted"):
                vectors.append(z.column_twisted(it, k))
            else:
                vectors.append(_columns(z)[it - 1])
        elif isinstance(it, ExteriorVector):
            if it.degree != 1:
                raise DimensionError("use top_pair for exterior vectors of degree > 1")
            vectors.append(tuple(it.to_list()))
        else:
            vectors.append(tuple(it))
    d = len(vectors[0])
    if len(vectors) != d:
        raise DimensionError(f"bracket needs {d} vectors, got {len(vectors)}")
    return _minor(vectors, tuple(range(d)))


def top_pair(u: ExteriorVector, v: ExteriorVector) -> Number:
    if u.dim != v.dim:
        raise DimensionError("ambient dimensions differ")
    if u.degree + v.degree != u.dim:
        raise DimensionError("degrees must add up to the ambient dimension")
    d = u.dim
    total = 0
    for a, x in u.coeffs.items():
        b = _complement(d, a)
        y = v.coeffs.get(b)
        if y is not None:
            total += shuffle_sign(a, b) * x * y
    return _clean(total)


def dot(u: ExteriorVector, v: ExteriorVector) -> Number:
    """Standard inner product in the lex basis."""
    if (u.degree, u.dim) != (v.degree, v.dim):
        raise DimensionError("exterior vectors of different shape")
    return _clean(sum(x * v.coeffs.get(k, 0) for k, x in u.coeffs.items()))


def hodge_star(u: ExteriorVector) -> ExteriorVector:
    """Linear extension of e_I -> sign(I, I^c) e_{I^c}, so that e_I ^ *(e_I) = e_{1..d}."""
    d = u.dim
    out = {}
    for a, x in u.coeffs.items():
        b = _complement(d, a)
        out[b] = shuffle_sign(a, b) * x
    return ExteriorVector(d - u.degree, d, out)


def factorize(u: ExteriorVector) -> list[tuple[Number, ...]] | None:
    """Vectors w_1..w_r with w_1 ^ ... ^ w_r = u exactly, or None if u is not decomposable."""
    if u.is_zero():
        raise DimensionError("the zero vector has no factorization")
    d, r = u.dim, u.degree
    if r == 0:
        return []
    if r == d:
        w = [[0] * d for _ in range(d)]
        for i in range(d):
            w[i][i] = 1
        w[0][0] = u[tuple(range(1, d + 1))]
        return [tuple(x) for x in w]
    # v -> v ^ u as a matrix: rows indexed by (r+1)-subsets, columns by coordinates of v
    rows_idx = subsets(d, r + 1)
    pos = subset_position(d, r + 1)
    mat = [[0] * d for _ in rows_idx]
    for a, x in u.coeffs.items():
        for i in range(1, d + 1):
            if i in a:
                continue
            key = tuple(sorted((i,) + a))
            mat[pos[key]][i - 1] += shuffle_sign((i,), a) * x
    ker = kernel_basis(mat)
    if ker.rows != r:
        return None
    vecs = [tuple(row) for row in ker.entries]
    w = wedge_vectors(vecs)
    c = u.ratio_to(w)
    if c is None:  # pragma: no cover - a kernel of the right dimension always spans u
        return None
    vecs[0] = tuple(_clean(c * x) for x in vecs[0])
    return vecs


def _as_factors(a) -> list[tuple[Number, ...]]:
    if isinstance(a, ExteriorVector):
        f = factorize(a)
        if f is None:
            raise DimensionError("meet requires decomposable inputs")
        return f
    return [tuple(v) for v in a]


def meet(a, b, expansion: int = 1):
    """Intersection of the subspaces spanned by ``a`` and ``b``.

    ``a`` and ``b`` are decomposable exterior vectors or explicit lists of
    spanning vectors.  With r + s = d + t the result has degree t; for t = 0
    it is the scalar bracket <a b>.

    ``expansion=1`` splits the factors of ``a``::

        sum over t-subsets I of a:  sign(I, I^c) <a_{I^c} b> a_I

    ``expansion=2`` splits the factors of ``b`` instead; it carries the extra
    sign (-1)^{t(d-s)} so both expansions return the same exterior vector.
    """
    fa, fb = _as_factors(a), _as_factors(b)
    d = len(fa[0])
    r, s = len(fa), len(fb)
    t = r + s - d
    if t < 0:
        raise DimensionError("degrees too small for a nontrivial intersection")
    if t == 0:
        return bracket(None, fa + fb)
    if expansion == 1:
        keep, split, other, split_first = t, fa, fb, True
    elif expansion == 2:
        keep, split, other, split_first = t, fb, fa, False
    else:
        raise ValueError("expansion must be 1 or 2")
    total = ExteriorVector(t, d, {})
    labels = tuple(range(len(split)))
    for kept in combinations(labels, keep):
        rest = tuple(i for i in labels if i not in kept)
        sgn = shuffle_sign(kept, rest)
        used = [split[i] for i in rest]
        stacked = used + other if split_first else other + used
        br = bracket(None, stacked)
        if br == 0:
            continue
        total = total + wedge_vectors([split[i] for i in kept]).scale(sgn * br)
    if expansion == 2 and (t * (d - s)) % 2:
        total = -total
    return total


def bar_line(z, i: int, j: int) -> ExteriorVector:
    """The line where the planes through columns (i-1, i, i+1) and (j-1, j, j+1) meet (k = m = 2).

    Columns are read with the twisted cyclic rule for k = 2.  The result is a
    positive multiple of the line (i, i+1) when j = i + 1, and pairs
    nonnegatively with every line (a, b) of the exterior cyclic polytope.
    """
    n = z.n
    if (i - j) % n == 0:
        raise DimensionError("bar line needs two distinct indices")
    if z.d != 4:
        raise DimensionError("bar lines are defined for 4-row matrices")
    plane_i = [z.column_twisted(x, 2) for x in (i - 1, i, i + 1)]
    plane_j = [z.column_twisted(x, 2) for x in (j - 1, j, j + 1)]
    return meet(plane_i, plane_j)


def rank_of_vectors(vectors: Sequence[Sequence[Number]]) -> int:
    return rank([list(v) for v in vectors]) if vectors else 0
