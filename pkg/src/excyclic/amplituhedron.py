"""Membership oracles for the k = m = 2 amplituhedron and its twisted dual.

A point Y of Gr(k, k+m) is stored as a k x (k+m) matrix together with its
Pluecker vector.  Points are projective, so every oracle accepts Y when either
Y or -Y satisfies the inequalities.

Three independent descriptions of A_{2,2,n}(Z) are provided:

* ``member_bar``: <Y ij-bar> >= 0 against every bar line,
* ``member_cone``: weak containment in the cone over C_{2,2,n}(Z),
* ``member_signflip``: the classical sign-flip description for m = 2.

``member_dual`` is the sign-flip description with zero flips.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .polycone import Mode, PointedCone, contains, exterior_as_normal
from .rational import DimensionError, RatMatrix, rank
from .schubert import exterior_cone
from .twistor import ExteriorVector, bar_line, factorize, hodge_star, top_pair, wedge_power_columns, wedge_vectors
from .zmatrix import PositiveMatrix, SplitMix64, random_nodes, twist

__all__ = [
    "GrassmannPoint",
    "Membership",
    "sample_amplituhedron",
    "image_of",
    "random_grassmann_point",
    "member_bar",
    "member_cone",
    "member_signflip",
    "member_dual",
    "bar_normals",
    "sign_flips",
    "SeparationReport",
    "separation_certificate",
    "separation_expansion",
    "separation_terms",
    "rejection_search",
    "LinearBoundaryReport",
    "linear_boundary_audit",
    "EquivalenceReport",
    "mixed_sample",
    "oracle_equivalence",
    "dual_equivalence",
]


@dataclass(frozen=True)
class GrassmannPoint:
    """A k-plane in Q^d given by a full-rank k x d matrix."""

    matrix: RatMatrix
    plucker: ExteriorVector = field(compare=False)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GrassmannPoint":
        m = rows if isinstance(rows, RatMatrix) else RatMatrix(rows)
        if rank(m) != m.rows:
            raise DimensionError("a Grassmannian point needs a full-rank matrix")
        p = wedge_vectors([tuple(_int(x) for x in r) for r in m.entries])
        return cls(m, p)

    @classmethod
    def from_plucker(cls, p: ExteriorVector) -> "GrassmannPoint":
        """Recover a spanning matrix from a decomposable Pluecker vector."""
        factors = factorize(p)
        if factors is None:
            raise DimensionError("vector is not decomposable")
        return cls(RatMatrix(factors), p)

    @property
    def k(self) -> int:
        return self.matrix.rows

    @property
    def d(self) -> int:
        return self.matrix.cols

    def star(self) -> "GrassmannPoint":
        """The orthogonal complement, as the point with Pluecker vector *Y (k = m only)."""
        if 2 * self.k != self.d:
            raise DimensionError("the star of a point stays in the same Grassmannian only when d = 2k")
        return GrassmannPoint.from_plucker(hodge_star(self.plucker))

    def coordinates(self) -> tuple:
        return tuple(self.plucker.to_list())

    def to_json(self) -> dict:
        return {"matrix": self.matrix.to_json(), "plucker": [str(x) for x in self.plucker.to_list()]}

    @classmethod
    def from_json(cls, obj) -> "GrassmannPoint":
        return cls.from_rows(RatMatrix.from_json(obj["matrix"] if "matrix" in obj else obj))


def _int(x):
    return x.numerator if getattr(x, "denominator", 1) == 1 and hasattr(x, "numerator") else x


class Membership(enum.Enum):
    """Tri-state verdict; only INSIDE is truthy."""

    INSIDE = "INSIDE"
    OUTSIDE = "OUTSIDE"
    BOUNDARY_OR_DEGENERATE = "BOUNDARY_OR_DEGENERATE"

    def __bool__(self) -> bool:
        return self is Membership.INSIDE


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------


def sample_amplituhedron(z: PositiveMatrix, k: int, seed: int) -> GrassmannPoint:
    """Image of a positive k x n Vandermonde matrix M: the row span of M Z^T."""
    if not 1 <= k <= z.d:
        raise DimensionError("need 1 <= k <= rows of Z")
    nodes = random_nodes(SplitMix64(seed), z.n)
    m = [[x**p for x in nodes] for p in range(k)]
    return image_of(z, m)


def image_of(z: PositiveMatrix, m: Sequence[Sequence]) -> GrassmannPoint:
    """Row span of M Z^T for a k x n matrix M."""
    cols = z.columns()
    rows = [[sum(a * c[i] for a, c in zip(r, cols)) for i in range(z.d)] for r in m]
    return GrassmannPoint.from_rows(_integer_scaled(rows))


def _integer_scaled(rows):
    from .rational import primitive

    return [list(primitive(r)) if any(r) else list(r) for r in rows]


def random_grassmann_point(rng: SplitMix64, k: int = 2, d: int = 4, bound: int = 1000) -> GrassmannPoint:
    """Integer k x d matrix with entries in [-bound, bound], redrawn until full rank."""
    while True:
        rows = [[rng.below(2 * bound + 1) - bound for _ in range(d)] for _ in range(k)]
        if rank(rows) == k:
            return GrassmannPoint.from_rows(rows)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def bar_normals(z: PositiveMatrix) -> tuple[tuple[tuple[int, int], tuple], ...]:
    """Dot-coordinate normals of the functionals Y -> <Y ij-bar>, one per pair i < j."""
    return tuple(
        ((i, j), exterior_as_normal(bar_line(z, i, j))) for i, j in combinations(range(1, z.n + 1), 2)
    )


@lru_cache(maxsize=64)
def _cone(z: PositiveMatrix) -> PointedCone:
    return exterior_cone(z, 2)


def _check_k2m2(y: GrassmannPoint, z: PositiveMatrix):
    if z.d != 4 or y.k != 2 or y.d != 4:
        raise DimensionError("this oracle is for k = m = 2")


def _one_sided(values: Sequence) -> bool:
    return all(v >= 0 for v in values) or all(v <= 0 for v in values)


def member_bar(y: GrassmannPoint, z: PositiveMatrix) -> bool:
    """<Y ij-bar> >= 0 for all i < j, for Y or -Y."""
    _check_k2m2(y, z)
    p = y.coordinates()
    vals = [sum(a * b for a, b in zip(nrm, p)) for _, nrm in bar_normals(z)]
    return _one_sided(vals)


def member_cone(y: GrassmannPoint, z: PositiveMatrix) -> bool:
    """Weak containment of Y or -Y in the cone over C_{2,2,n}(Z)."""
    _check_k2m2(y, z)
    p = y.coordinates()
    c = _cone(z)
    return contains(c, p, Mode.WEAK) or contains(c, tuple(-x for x in p), Mode.WEAK)


def _pair_brackets(y: GrassmannPoint, z: PositiveMatrix) -> dict[tuple[int, int], int]:
    if y.d != z.d or z.d - y.k != 2:
        raise DimensionError("sign-flip brackets need m = 2")
    lines = wedge_power_columns(z, 2)
    labels = list(combinations(range(1, z.n + 1), 2))
    wanted = {(i, i + 1) for i in range(1, z.n)} | {(1, j) for j in range(2, z.n + 1)}
    out = {}
    for lab, col in zip(labels, lines):
        if lab in wanted:
            out[lab] = top_pair(y.plucker, ExteriorVector.from_list(2, z.d, col))
    return out


def sign_flips(values: Sequence) -> int:
    """Sign changes along the sequence, ignoring zeros."""
    signs = [v > 0 for v in values if v != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def _signflip_verdict(y: GrassmannPoint, z: PositiveMatrix, flips: int, last_positive: bool) -> Membership:
    br = _pair_brackets(y, z)
    n = z.n
    first = br[(1, 2)]
    if first == 0:
        return Membership.BOUNDARY_OR_DEGENERATE
    s = 1 if first > 0 else -1
    adjacent = [s * br[(i, i + 1)] for i in range(1, n)]
    seq = [s * br[(1, j)] for j in range(2, n + 1)]
    if any(v < 0 for v in adjacent):
        return Membership.OUTSIDE
    if last_positive and seq[-1] < 0:
        return Membership.OUTSIDE
    if any(v == 0 for v in adjacent) or any(v == 0 for v in seq):
        return Membership.BOUNDARY_OR_DEGENERATE
    return Membership.INSIDE if sign_flips(seq) == flips else Membership.OUTSIDE


def member_signflip(y: GrassmannPoint, z: PositiveMatrix, k: int | None = None) -> Membership:
    """Sign-flip description of A_{k,2,n}(Z).

    With the orientation fixed by <Y 12> > 0: <Y i i+1> > 0 for i < n and the
    sequence (<Y 12>, ..., <Y 1n>) has exactly k sign changes.  An exact zero
    in any of these brackets gives BOUNDARY_OR_DEGENERATE.
    """
    k = y.k if k is None else k
    return _signflip_verdict(y, z, k, last_positive=False)


def member_dual(y: GrassmannPoint, z: PositiveMatrix) -> Membership:
    """Zero-flip description: <Y i i+1> > 0 for i < n, <Y 1n> > 0, no sign changes along <Y 1j>."""
    return _signflip_verdict(y, z, 0, last_positive=True)


# ---------------------------------------------------------------------------
# Separating hyperplane
# ---------------------------------------------------------------------------


def _wrap_pair(a: int, b: int, n: int) -> tuple[int, tuple[int, int]]:
    """Sign and sorted label of e_a ^ e_b after twisted wrapping (k = 2: one sign per wrap)."""
    sign = 1
    qa, ra = divmod(a - 1, n)
    qb, rb = divmod(b - 1, n)
    if qa % 2:
        sign = -sign
    if qb % 2:
        sign = -sign
    x, y = ra + 1, rb + 1
    if x == y:
        return 0, (x, y)
    if x > y:
        sign, x, y = -sign, y, x
    return sign, (x, y)


def _twisted_bracket(z: PositiveMatrix, labels: Sequence[int]) -> int:
    return wedge_vectors([z.column_twisted(i, 2) for i in labels])[tuple(range(1, 5))]


def separation_terms(z: PositiveMatrix, a: int, b: int) -> list[tuple[tuple[int, int], int]]:
    """The three raw terms of the bar line (a, b): lines (a-1 a), (a a+1), (a-1 a+1) with bracket coefficients.

    Labels are left unwrapped, so a - 1 may be 0 and a + 1 may be n + 1.
    """
    return [
        ((a - 1, a), _twisted_bracket(z, (a + 1, b - 1, b, b + 1))),
        ((a, a + 1), _twisted_bracket(z, (a - 1, b - 1, b, b + 1))),
        ((a - 1, a + 1), -_twisted_bracket(z, (a, b - 1, b, b + 1))),
    ]


def separation_expansion(z: PositiveMatrix, a: int, b: int) -> dict[tuple[int, int], int]:
    """The raw terms rewritten in sorted labels 1..n, with zero coefficients dropped."""
    out: dict[tuple[int, int], int] = {}
    for (x, y), c in separation_terms(z, a, b):
        s, lab = _wrap_pair(x, y, z.n)
        if s == 0 or c == 0:
            continue
        out[lab] = out.get(lab, 0) + s * c
    return {lab: c for lab, c in out.items() if c}


@dataclass
class SeparationReport:
    n: int
    passed: bool
    pairings: dict[tuple[int, int], int]
    expansion_matches_bar: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "expansion_matches_bar": self.expansion_matches_bar,
            "pairings": {f"{a},{b}": str(v) for (a, b), v in sorted(self.pairings.items())},
        }


def separation_certificate(z: PositiveMatrix) -> SeparationReport:
    """Pair each T(e_ab) with v = sum of e_ab over |b - a| = 2 and check every pairing is <= 0.

    Also confirms that the three-term expansion equals the bar line computed
    by the general meet, so the table really describes <Y ab-bar>.
    """
    if z.d != 4:
        raise DimensionError("the separation certificate is for 4-row matrices")
    n = z.n
    support = {(a, a + 2) for a in range(1, n - 1)}
    pairings = {}
    matches = True
    for a, b in combinations(range(1, n + 1), 2):
        exp = separation_expansion(z, a, b)
        pairings[(a, b)] = sum(c for lab, c in exp.items() if lab in support)
        rebuilt = ExteriorVector(2, 4, {})
        for (x, y), c in exp.items():
            rebuilt = rebuilt + z.wedge((x, y)).scale(c)
        if rebuilt != bar_line(z, a, b):
            matches = False
    passed = matches and all(v <= 0 for v in pairings.values())
    return SeparationReport(n, passed, pairings, matches)


def rejection_search(z: PositiveMatrix, draws: int, seed: int, bound: int = 1000) -> int:
    """Count random Gr(2,4) points with every <Y ij> > 0 and every <Y ij-bar> > 0 (for Y or -Y)."""
    rng = SplitMix64(seed)
    lines = [exterior_as_normal_lines(z)]
    bars = [nrm for _, nrm in bar_normals(z)]
    hits = 0
    for _ in range(draws):
        p = random_grassmann_point(rng, 2, 4, bound).coordinates()
        for s in (1, -1):
            if all(s * _dot(h, p) > 0 for h in lines[0]) and all(s * _dot(h, p) > 0 for h in bars):
                hits += 1
                break
    return hits


def exterior_as_normal_lines(z: PositiveMatrix) -> list[tuple]:
    """Dot normals of Y -> <Y ij> for all i < j."""
    return [exterior_as_normal(ExteriorVector.from_list(2, 4, c)) for c in wedge_power_columns(z, 2)]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Linear boundaries for m = n - 4
# ---------------------------------------------------------------------------


@dataclass
class LinearBoundaryReport:
    n: int
    passing: list[list[tuple[int, int]]]
    passing_are_k4_complements: bool
    k4_sets: list[tuple[int, ...]]
    candidates: int
    hull_facets: int | None = None
    hull_agrees: bool | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "candidates": self.candidates,
            "passing": len(self.passing),
            "passing_are_k4_complements": self.passing_are_k4_complements,
            "k4_vertex_sets": [list(s) for s in self.k4_sets],
        }
        if self.hull_facets is not None:
            out["hull_facets"] = self.hull_facets
            out["hull_agrees"] = self.hull_agrees
        return out


def _facet_of_rays(rays: Sequence[Sequence[int]], members: set[int]) -> bool:
    """Whether the rays indexed by ``members`` span a hyperplane with every other ray strictly on one side."""
    from .rational import kernel_basis

    ker = kernel_basis([list(rays[i]) for i in sorted(members)])
    if ker.rows != 1:
        return False
    normal = ker.entries[0]
    vals = [sum(a * b for a, b in zip(normal, r)) for r in rays]
    zero = {i for i, v in enumerate(vals) if v == 0}
    if zero != members:
        return False
    return all(v >= 0 for v in vals) or all(v <= 0 for v in vals)


def linear_boundary_audit(z: PositiveMatrix, guard: int = 8, hull_up_to: int = 7) -> LinearBoundaryReport:
    """Facets of C_{2,n-4,n}(Z) whose vertex graph passes the four-vertex positroid filter.

    Candidates are the positroid hyperplanes of the generic matroid (complements
    of positroid circuits of H_2(n)); each is kept when its lines span a
    supporting hyperplane of the cone over the polytope.  For small n the full
    convex hull is also computed and its filtered facets compared.  Every
    passing facet is checked to be the complement of a K4.
    """
    from .matroid import locally_positroid, positroid_circuit_search, positroid_table_4

    n = z.n
    if n > guard:
        raise ValueError(f"n={n} exceeds the guard {guard}")
    if z.d != n - 2:
        raise DimensionError("need a (n-2) x n matrix, i.e. k = 2 and m = n - 4")
    labels = list(combinations(range(1, n + 1), 2))
    rays = wedge_power_columns(z, 2)
    all_edges = frozenset(labels)
    circuits = positroid_circuit_search(2, n, guard=guard)
    passing = []
    for comp in circuits:
        members = {labels.index(e) for e in all_edges - comp}
        if _facet_of_rays(rays, members):
            passing.append(frozenset(all_edges - comp))
    k4, ok = [], True
    for g in passing:
        comp = all_edges - g
        verts = sorted({v for e in comp for v in e})
        if len(verts) == 4 and len(comp) == 6:
            k4.append(tuple(verts))
        else:
            ok = False
    report = LinearBoundaryReport(n, [sorted(g) for g in passing], ok, sorted(k4), len(circuits))
    if n <= hull_up_to:
        cone = exterior_cone(z, 2)
        table = positroid_table_4()
        via_hull = {frozenset(cone.labels[r] for r in inc) for inc in cone.incidence}
        via_hull = {g for g in via_hull if locally_positroid(g, n, table)}
        report.hull_facets = len(cone.facets)
        report.hull_agrees = via_hull == set(passing)
    return report


# ---------------------------------------------------------------------------
# Batch equivalence runs
# ---------------------------------------------------------------------------


@dataclass
class EquivalenceReport:
    n: int
    samples: int
    disagreements: int
    boundary: int
    inside: int
    sign_chambers: int
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "disagreements": self.disagreements,
            "boundary": self.boundary,
            "inside": self.inside,
            "sign_chambers": self.sign_chambers,
            "witnesses": self.witnesses[:5],
        }


def mixed_sample(z: PositiveMatrix, rng: SplitMix64, index: int, bound: int = 1000, spread: int = 3) -> GrassmannPoint:
    """Alternate uniform integer Gr(2,4) points with images M Z^T of random small integer M.

    Uniform draws alone land in very few sign chambers when the columns of Z
    have wildly different scales; the images cover inside and outside evenly.
    """
    if index % 2:
        return random_grassmann_point(rng, 2, z.d, bound)
    while True:
        m = [[rng.below(2 * spread + 1) - spread for _ in range(z.n)] for _ in range(2)]
        try:
            return image_of(z, m)
        except DimensionError:
            continue


def oracle_equivalence(z: PositiveMatrix, samples: int, seed: int) -> EquivalenceReport:
    """Compare member_bar, member_cone and member_signflip on random Gr(2,4) points.

    Points where the sign-flip oracle reports a boundary are only required to
    agree between the two weak oracles.
    """
    rng = SplitMix64(seed)
    lines = exterior_as_normal_lines(z)
    bad = boundary = inside = 0
    chambers = set()
    witnesses = []
    for t in range(samples):
        y = mixed_sample(z, rng, t)
        p = y.coordinates()
        chambers.add(tuple(_dot(h, p) > 0 for h in lines))
        sf = member_signflip(y, z, 2)
        b, c = member_bar(y, z), member_cone(y, z)
        if sf is Membership.BOUNDARY_OR_DEGENERATE:
            boundary += 1
            if b != c:
                bad += 1
                witnesses.append(y.to_json())
            continue
        inside += bool(sf)
        if not (b == c == bool(sf)):
            bad += 1
            witnesses.append(y.to_json())
    return EquivalenceReport(z.n, samples, bad, boundary, inside, len(chambers), witnesses)


def dual_equivalence(z: PositiveMatrix, samples: int, seed: int) -> EquivalenceReport:
    """Compare member_dual(Y, Z) with member_bar(*Y, tau Z) on random Gr(2,4) points.

    The Hodge star converts the bracket pairing <Y ij> into the standard inner
    product that identifies projective space with its dual.
    """
    w = twist(z, 2, 2)
    rng = SplitMix64(seed)
    lines = exterior_as_normal_lines(z)
    bad = boundary = inside = 0
    chambers = set()
    witnesses = []
    for t in range(samples):
        y = mixed_sample(z, rng, t)
        chambers.add(tuple(_dot(h, y.coordinates()) > 0 for h in lines))
        dv = member_dual(y, z)
        if dv is Membership.BOUNDARY_OR_DEGENERATE:
            boundary += 1
            continue
        inside += bool(dv)
        if bool(dv) != member_bar(y.star(), w):
            bad += 1
            witnesses.append(y.to_json())
    return EquivalenceReport(z.n, samples, bad, boundary, inside, len(chambers), witnesses)
