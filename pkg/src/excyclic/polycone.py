"""Pointed polyhedral cones with exact integer data.

A cone is stored with both descriptions: primitive integer rays and
primitive integer inward facet normals, plus the ray/facet incidence.  Facet
normals act on rays by the ordinary dot product; :func:`normal_as_exterior`
rewrites a normal as an exterior vector acting through the top-wedge pairing
when the ambient space is an exterior power.

Conversion between the two descriptions is an incremental double description
method with a combinatorial adjacency test: two extreme rays are adjacent
exactly when no third ray is tight on every constraint they share.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .rational import DimensionError, int_rank, kernel_basis, primitive
from .twistor import ExteriorVector, shuffle_sign, subsets

__all__ = [
    "PointedCone",
    "NotPointedError",
    "Pairing",
    "Mode",
    "cone_from_rays",
    "cone_from_inequalities",
    "double_description",
    "face_lattice",
    "f_vector",
    "dual_cone",
    "delete_facets",
    "contains",
    "normal_as_exterior",
    "exterior_as_normal",
]


class NotPointedError(ValueError):
    """The cone contains a line; ``lineality`` is a nonzero vector of that line."""

    def __init__(self, lineality: Sequence[int], message: str = "cone is not pointed"):
        super().__init__(f"{message}; lineality vector {list(lineality)}")
        self.lineality = tuple(lineality)


class Pairing(enum.Enum):
    IDENTITY = "identity"
    TOP_WEDGE = "top-wedge"


class Mode(enum.Enum):
    WEAK = "weak"
    STRICT = "strict"


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive_int(v: Sequence) -> tuple[int, ...]:
    if any(isinstance(x, Fraction) for x in v):
        return primitive(v)
    g = reduce(gcd, v, 0)
    return tuple(v) if g in (0, 1) else tuple(x // g for x in v)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _adjugate_columns(rows: list[Sequence[int]]) -> list[tuple[int, ...]]:
    """Columns c_j with rows . c_j = |det| e_j (so each c_j is a ray of the initial simplicial cone)."""
    from .rational import int_det

    d = len(rows)
    full = int_det(rows)
    sgn = 1 if full > 0 else -1
    cols = []
    for j in range(d):
        col = []
        for i in range(d):
            # cofactor C_{ji} of the (j, i) entry gives adjugate entry (i, j)
            minor = [r[:i] + r[i + 1 :] for t, r in enumerate(rows) if t != j]
            c = int_det(minor) if minor else 1
            col.append(sgn * (-1) ** (i + j) * c)
        cols.append(_primitive_int(col))
    return cols


def double_description(constraints: Sequence[Sequence[int]]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Extreme rays of {x : a . x >= 0 for every constraint a}.

    The constraint matrix must have full column rank (so the cone is pointed).
    Constraints are inserted in the given order after an initial basis chosen
    greedily from the front.  Returns the rays and, for each ray, a bitmask of
    the constraints it satisfies with equality.
    """
    cons = [tuple(int(x) for x in a) for a in constraints]
    if not cons:
        raise DimensionError("no constraints")
    d = len(cons[0])
    basis: list[int] = []
    for i, a in enumerate(cons):
        if int_rank([cons[j] for j in basis] + [a]) > len(basis):
            basis.append(i)
            if len(basis) == d:
                break
    if len(basis) < d:
        ker = kernel_basis(cons)
        raise NotPointedError(ker.entries[0] if ker.rows else (), "constraints do not have full rank")

    rays = _adjugate_columns([cons[i] for i in basis])
    # ray j is tight on every basis constraint except the j-th
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    tight = [all_basis & ~(1 << basis[j]) for j in range(d)]

    in_basis = set(basis)
    processed = all_basis
    for idx, a in enumerate(cons):
        if idx in in_basis:
            continue
        vals = [_dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        bit = 1 << idx
        new_rays: list[tuple[int, ...]] = []
        new_tight: list[int] = []
        if neg:
            for p in pos:
                tp = tight[p]
                for q in neg:
                    common = tp & tight[q]
                    if _popcount(common) < d - 2:
                        continue
                    adjacent = True
                    for r in range(len(rays)):
                        if r != p and r != q and tight[r] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    vp, vq = vals[p], -vals[q]
                    ray = tuple(vp * y + vq * x for x, y in zip(rays[p], rays[q]))
                    new_rays.append(_primitive_int(ray))
                    new_tight.append(common | bit)
        keep = pos + zero
        rays = [rays[i] for i in keep] + new_rays
        tight = [tight[i] | (bit if vals[i] == 0 else 0) for i in keep] + new_tight
        processed |= bit
    return rays, tight


def _full_rank(vectors: Sequence[Sequence[int]], d: int) -> bool:
    return bool(vectors) and int_rank(list(vectors)) == d


@dataclass(frozen=True)
class PointedCone:
    """Rays, inward facet normals (dot-product pairing) and incidence sets.

    ``incidence[f]`` is the frozenset of ray indices with ``facet . ray == 0``.
    ``degree`` records k when the ambient space is the k-th exterior power of
    Q^(k+m); it is what lets normals be read as exterior vectors.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]
    incidence: tuple[frozenset[int], ...]
    pairing: Pairing = Pairing.IDENTITY
    degree: int | None = None
    labels: tuple | None = field(default=None, compare=False)

    # canonical comparison ignores ordering
    def canonical(self) -> tuple[frozenset, frozenset]:
        return frozenset(self.rays), frozenset(self.facets)

    def same_as(self, other: "PointedCone") -> bool:
        return self.dim == other.dim and self.canonical() == other.canonical()

    @property
    def ray_incidence(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in self.rays]
        for f, inc in enumerate(self.incidence):
            for r in inc:
                out[r].add(f)
        return tuple(frozenset(s) for s in out)

    def facet_exterior(self, index: int) -> ExteriorVector:
        """Facet normal rewritten for the top-wedge pairing."""
        if self.degree is None:
            raise ValueError("cone was not built in an exterior power")
        return normal_as_exterior(self.facets[index], self.degree, _exterior_dim(self.dim, self.degree))

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "facets": [list(f) for f in self.facets],
            "incidence": [sorted(s) for s in self.incidence],
        }
        if self.pairing is Pairing.TOP_WEDGE and self.degree is not None:
            out["facets_exterior"] = [self.facet_exterior(i).to_json() for i in range(len(self.facets))]
        return out

    @classmethod
    def from_json(cls, obj) -> "PointedCone":
        rays = tuple(tuple(int(x) for x in r) for r in obj["rays"])
        facets = tuple(tuple(int(x) for x in f) for f in obj["facets"])
        inc = tuple(frozenset(int(i) for i in s) for s in obj["incidence"])
        return cls(int(obj["dim"]), rays, facets, inc)


def _exterior_dim(binom_value: int, k: int) -> int:
    d = k
    from math import comb

    while comb(d, k) < binom_value:
        d += 1
    if comb(d, k) != binom_value:
        raise DimensionError("ambient dimension is not a binomial coefficient")
    return d


def normal_as_exterior(normal: Sequence[int], k: int, d: int) -> ExteriorVector:
    """The degree d-k vector h with top_pair(v, h) = normal . v for every degree-k v."""
    coeffs = {}
    for a, x in zip(subsets(d, k), normal):
        if x:
            comp = tuple(i for i in range(1, d + 1) if i not in a)
            coeffs[comp] = shuffle_sign(a, comp) * x
    return ExteriorVector(d - k, d, coeffs)


def exterior_as_normal(h: ExteriorVector) -> tuple:
    """Inverse of :func:`normal_as_exterior`: the functional v -> top_pair(v, h) in dot coordinates."""
    d, k = h.dim, h.dim - h.degree
    out = []
    for a in subsets(d, k):
        comp = tuple(i for i in range(1, d + 1) if i not in a)
        out.append(shuffle_sign(a, comp) * h[comp])
    return tuple(out)


def _finish(dim, rays, facets, pairing, degree, labels=None) -> PointedCone:
    incidence = tuple(frozenset(i for i, r in enumerate(rays) if _dot(f, r) == 0) for f in facets)
    return PointedCone(dim, tuple(rays), tuple(facets), incidence, pairing, degree, labels)


def _dedupe(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for v in vectors:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def cone_from_rays(
    rays: Sequence[Sequence],
    pairing: Pairing = Pairing.IDENTITY,
    degree: int | None = None,
    labels: Sequence | None = None,
) -> PointedCone:
    """Facets of the cone generated by ``rays``.

    Rays are rescaled to primitive integer vectors; duplicates and rays that
    are not extreme are dropped.  ``labels`` (one per input ray) is carried
    along for the surviving rays.
    """
    prim = [_primitive_int(r) for r in rays]
    if not prim:
        raise DimensionError("no rays")
    if any(not any(r) for r in prim):
        raise DimensionError("zero ray")
    d = len(prim[0])
    if int_rank(prim) < d:
        ker = kernel_basis(prim)
        raise DimensionError(f"rays span a proper subspace (normal {list(ker.entries[0])})")
    label_of = {}
    if labels is not None:
        for r, lab in zip(prim, labels):
            label_of.setdefault(r, lab)
    uniq = _dedupe(prim)
    # facets of cone(R) are the extreme rays of {a : a . r >= 0}
    facets, tight = double_description(uniq)
    if not _full_rank(facets, d):
        ker = kernel_basis(facets) if facets else None
        vec = ker.entries[0] if ker is not None and ker.rows else tuple(int(i == 0) for i in range(d))
        raise NotPointedError(vec)
    # a generator is extreme iff the facets through it span a (d-1)-space
    keep = []
    for j, r in enumerate(uniq):
        through = [facets[f] for f in range(len(facets)) if tight[f] >> j & 1]
        if len(through) >= d - 1 and int_rank(through) == d - 1:
            keep.append(r)
    out_labels = tuple(label_of[r] for r in keep) if labels is not None else None
    return _finish(d, keep, facets, pairing, degree, out_labels)


def cone_from_inequalities(
    normals: Sequence[Sequence],
    pairing: Pairing = Pairing.IDENTITY,
    degree: int | None = None,
) -> PointedCone:
    """The cone {x : a . x >= 0} with redundant inequalities removed."""
    prim = _dedupe(_primitive_int(a) for a in normals)
    if not prim:
        raise DimensionError("no inequalities")
    d = len(prim[0])
    if int_rank(prim) < d:
        ker = kernel_basis(prim)
        raise NotPointedError(ker.entries[0])
    rays, tight = double_description(prim)
    if not _full_rank(rays, d):
        raise DimensionError("inequalities define a lower-dimensional cone")
    kept = []
    for j, a in enumerate(prim):
        on = [rays[r] for r in range(len(rays)) if tight[r] >> j & 1]
        if len(on) >= d - 1 and int_rank(on) == d - 1:
            kept.append(a)
    return _finish(d, rays, kept, pairing, degree)


def dual_cone(c: PointedCone) -> PointedCone:
    """Swap rays and facet normals (duality for the dot-product pairing)."""
    if not _full_rank(c.rays, c.dim):
        raise DimensionError("dual of a lower-dimensional cone is not pointed")
    return _finish(c.dim, list(c.facets), list(c.rays), c.pairing, c.degree)


def delete_facets(c: PointedCone, keep: Iterable[int]) -> PointedCone:
    """The cone cut out by the kept facet inequalities only."""
    keep = sorted(set(keep))
    normals = [c.facets[i] for i in keep]
    if not normals or int_rank(normals) < c.dim:
        ker = kernel_basis(normals) if normals else None
        vec = ker.entries[0] if ker is not None and ker.rows else tuple(int(i == 0) for i in range(c.dim))
        raise NotPointedError(vec, "kept normals lie in a common hyperplane")
    if len(keep) == len(c.facets):
        return c
    return cone_from_inequalities(normals, c.pairing, c.degree)


def contains(c: PointedCone, y: Sequence, mode: Mode = Mode.WEAK) -> bool:
    y = _primitive_int(y) if any(isinstance(x, Fraction) for x in y) else tuple(y)
    if mode is Mode.WEAK:
        return all(_dot(f, y) >= 0 for f in c.facets)
    return all(_dot(f, y) > 0 for f in c.facets)


# ---------------------------------------------------------------------------
# Face lattice
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceLattice:
    """Faces as ray-index bitmasks grouped by dimension of the projective polytope.

    ``levels[j]`` lists the faces of dimension j; the top level holds the
    polytope itself.  The empty face is not stored.
    """

    levels: tuple[tuple[int, ...], ...]

    @property
    def faces(self) -> list[tuple[frozenset[int], int]]:
        return [(frozenset(_bits(m)), j) for j, lev in enumerate(self.levels) for m in lev]

    def f_vector(self) -> list[int]:
        return [len(lev) for lev in self.levels]


def face_lattice(c: PointedCone) -> FaceLattice:
    """All nonempty faces, top-down: the facets of a face F are the maximal proper sets F & G over facets G."""
    d = c.dim
    facet_masks = []
    for inc in c.incidence:
        m = 0
        for r in inc:
            m |= 1 << r
        facet_masks.append(m)
    top = (1 << len(c.rays)) - 1
    levels: list[list[int]] = [[] for _ in range(d)]
    levels[d - 1] = [top]
    if d >= 2:
        levels[d - 2] = sorted(set(facet_masks))
    for j in range(d - 2, 0, -1):
        below: set[int] = set()
        for face in levels[j]:
            cands = {face & g for g in facet_masks}
            cands.discard(face)
            cands.discard(0)
            # keep inclusion-maximal candidates
            ordered = sorted(cands, key=_popcount, reverse=True)
            maximal: list[int] = []
            for x in ordered:
                if not any(x & y == x for y in maximal):
                    maximal.append(x)
            below.update(maximal)
        levels[j - 1] = sorted(below)
    return FaceLattice(tuple(tuple(lev) for lev in levels))


def f_vector(c: PointedCone) -> list[int]:
    """(f_0, ..., f_{dim-2}, 1) for the projective polytope over the cone."""
    return face_lattice(c).f_vector()


def euler_characteristic(fv: Sequence[int]) -> int:
    """Alternating sum over proper faces f_0..f_{d-2} (the trailing 1 is excluded)."""
    return sum((-1) ** i * x for i, x in enumerate(fv[:-1]))
