"""Schubert facets of exterior cyclic polytopes and the twist duality.

A facet normal ``a`` (acting by dot product on the k-th exterior power of
Q^(k+m)) is rewritten as a degree-m exterior vector ``h`` with
``top_pair(v, h) = a . v``.  The facet is Schubert when ``h`` is decomposable:
then ``h = w_1 ^ ... ^ w_m`` and the facet hyperplane meets the Grassmannian
in the k-planes that meet span(w_1, ..., w_m) nontrivially.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .polycone import (
    Pairing,
    PointedCone,
    cone_from_rays,
    delete_facets,
    dual_cone,
    exterior_as_normal,
)
from .rational import DimensionError, primitive, rank
from .twistor import ExteriorVector, bar_line, factorize, subsets, wedge_power_columns, wedge_vectors
from .zmatrix import PositiveMatrix, twist

__all__ = [
    "Kind",
    "FacetClassification",
    "is_decomposable",
    "exterior_cone",
    "classify_facets",
    "predicted_schubert_normals",
    "schubert_polytope",
    "twist_duality_check",
    "consecutive_facet_normals",
    "primitive_exterior",
    "twisted_triple_normals",
    "schubert_vertex_counts",
    "witness_meets_vertices",
    "DualityReport",
]


class Kind(enum.Enum):
    SCHUBERT = "SCHUBERT"
    NON_SCHUBERT = "NON_SCHUBERT"


@dataclass
class FacetClassification:
    index: int
    vertices: list[tuple[int, ...]]
    normal: ExteriorVector
    kind: Kind
    witness: list[tuple] | None = None

    def to_json(self) -> dict:
        out = {
            "index": self.index,
            "vertices": [list(v) for v in self.vertices],
            "normal": self.normal.to_json(),
            "kind": self.kind.value,
        }
        if self.witness is not None:
            out["witness"] = [[str(x) for x in w] for w in self.witness]
        return out


def is_decomposable(h: ExteriorVector) -> tuple[bool, list[tuple] | None]:
    """Whether h is a pure wedge; on success also return factors with w_1 ^ ... ^ w_r = h."""
    if h.is_zero():
        raise DimensionError("the zero vector is not a point of projective space")
    f = factorize(h)
    return (f is not None), f


def primitive_exterior(h: ExteriorVector) -> ExteriorVector:
    """Positive rescaling to coprime integer coefficients."""
    return ExteriorVector.from_list(h.degree, h.dim, list(primitive(h.to_list())))


def exterior_cone(z: PositiveMatrix, k: int) -> PointedCone:
    """Cone over the exterior cyclic polytope: generated by the wedges of k columns."""
    n = z.n
    return cone_from_rays(
        wedge_power_columns(z, k),
        pairing=Pairing.TOP_WEDGE,
        degree=k,
        labels=list(subsets(n, k)),
    )


def classify_facets(z: PositiveMatrix, k: int, cone: PointedCone | None = None) -> list[FacetClassification]:
    c = cone if cone is not None else exterior_cone(z, k)
    labels = c.labels
    out = []
    for f in range(len(c.facets)):
        h = c.facet_exterior(f)
        ok, factors = is_decomposable(h)
        verts = sorted(labels[r] for r in c.incidence[f])
        out.append(FacetClassification(f, verts, h, Kind.SCHUBERT if ok else Kind.NON_SCHUBERT, factors))
    return out


def predicted_schubert_normals(z: PositiveMatrix) -> set[ExteriorVector]:
    """The bar lines of all pairs i < j, as primitive exterior vectors (k = m = 2)."""
    if z.d != 4:
        raise DimensionError("predicted Schubert normals are for 4-row matrices")
    return {primitive_exterior(bar_line(z, i, j)) for i, j in combinations(range(1, z.n + 1), 2)}


def schubert_polytope(z: PositiveMatrix, k: int, cone: PointedCone | None = None) -> PointedCone:
    c = cone if cone is not None else exterior_cone(z, k)
    keep = [f.index for f in classify_facets(z, k, c) if f.kind is Kind.SCHUBERT]
    return delete_facets(c, keep)


def consecutive_facet_normals(z: PositiveMatrix, k: int, m: int) -> list[tuple[int, ...]]:
    """Dot-coordinate normals of the inequalities built from consecutive column pairs.

    For even m these are <Y (i1 i1+1) ... (i_{m/2} i_{m/2}+1)>; for odd m they
    are (-1)^k <Y 1 (i1 i1+1) ...> and <Y (i1 i1+1) ... n>.  Indices wrap with
    the twisted cyclic sign.
    """
    n = z.n
    normals = []
    half = m // 2
    starts = range(1, n + 1)
    for chosen in combinations(starts, half):
        labels = []
        for i in chosen:
            labels.extend([i, i + 1])
        if m % 2 == 0:
            groups = [labels]
        else:
            groups = [[1] + labels, labels + [n]]
        for gi, lab in enumerate(groups):
            if len(set((x - 1) % n for x in lab)) != len(lab):
                continue
            h = wedge_vectors([z.column_twisted(x, k) for x in lab])
            if h.is_zero():
                continue
            if m % 2 and gi == 0 and k % 2:
                h = -h
            normals.append(tuple(primitive(exterior_as_normal(h))))
    return sorted(set(normals))


@dataclass
class DualityReport:
    n: int
    equal: bool
    schubert_facets: int
    rays_match: bool
    facets_match: bool
    vertex_identity: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "equal": self.equal,
            "schubert_facets": self.schubert_facets,
            "rays_match": self.rays_match,
            "facets_match": self.facets_match,
            "vertex_identity": self.vertex_identity,
            **self.details,
        }


def _is_plucker_point(v: Sequence[int]) -> bool:
    """A point of P(wedge^2 Q^4) lies on Gr(2,4) iff p12 p34 - p13 p24 + p14 p23 = 0."""
    p12, p13, p14, p23, p24, p34 = v
    return p12 * p34 - p13 * p24 + p14 * p23 == 0


def twist_duality_check(z: PositiveMatrix) -> DualityReport:
    """Compare the Schubert polytope of Z with the dual of the exterior cyclic polytope of its twist (k = m = 2)."""
    if z.d != 4:
        raise DimensionError("twist duality is checked for 4-row matrices")
    cz = exterior_cone(z, 2)
    tilde = schubert_polytope(z, 2, cz)
    w = twist(z, 2, 2)
    dual = dual_cone(exterior_cone(w, 2))
    rays_match = set(tilde.rays) == set(dual.rays)
    facets_match = set(tilde.facets) == set(dual.facets)
    # vertices of the Schubert polytope lying on Gr(2,4) are exactly the lines (ij)
    on_gr = {r for r in tilde.rays if _is_plucker_point(r)}
    lines = {tuple(primitive(c)) for c in wedge_power_columns(z, 2)}
    return DualityReport(
        n=z.n,
        equal=tilde.same_as(dual),
        schubert_facets=len(tilde.facets),
        rays_match=rays_match,
        facets_match=facets_match,
        vertex_identity=on_gr == lines,
        details={"schubert_rays": len(tilde.rays), "rays_on_grassmannian": len(on_gr)},
    )


def twisted_triple_normals(z: PositiveMatrix) -> set[tuple[int, ...]]:
    """Primitive W_i ^ W_j ^ W_l (dot coordinates) for the k = 3, m = 2 twist."""
    w = twist(z, 3, 2)
    cols = w.columns()
    return {tuple(primitive(wedge_vectors([cols[a], cols[b], cols[c]]).to_list())) for a, b, c in combinations(range(w.n), 3)}


def schubert_vertex_counts(classes: Sequence[FacetClassification]) -> dict[int, int]:
    out: dict[int, int] = {}
    for f in classes:
        if f.kind is Kind.SCHUBERT:
            out[len(f.vertices)] = out.get(len(f.vertices), 0) + 1
    return dict(sorted(out.items()))


def witness_meets_vertices(z: PositiveMatrix, f: FacetClassification) -> bool:
    """The transversal span(witness) meets span(Z_i1..Z_ik) for every incident vertex."""
    if f.witness is None:
        return False
    m = len(f.witness)
    for v in f.vertices:
        vecs = [z.column(i) for i in v]
        if rank([list(w) for w in f.witness] + [list(x) for x in vecs]) >= m + len(v):
            return False
    return True
