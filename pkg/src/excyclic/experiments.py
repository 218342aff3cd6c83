"""Named, reproducible experiments with PASS / FAIL / FINDING verdicts.

Each experiment returns an :class:`ExperimentReport`.  FINDING marks a
deviation from a claim that is itself conjectural; FAIL marks a deviation
from a proven or asserted statement.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable

from . import amplituhedron as amp
from . import matroid as mt
from .polycone import f_vector, normal_as_exterior
from .rational import int_det, kernel_basis, primitive
from .schubert import (
    Kind,
    classify_facets,
    exterior_cone,
    is_decomposable,
    predicted_schubert_normals,
    primitive_exterior,
    schubert_polytope,
    schubert_vertex_counts,
    twist_duality_check,
    twisted_triple_normals,
    witness_meets_vertices,
)
from .polycone import dual_cone
from .zmatrix import random_positive, twist, vandermonde

__all__ = ["ExperimentReport", "REGISTRY", "run_experiment", "TABLE_F_VECTORS", "UnknownExperiment"]


class UnknownExperiment(KeyError):
    pass


@dataclass
class ExperimentReport:
    name: str
    anchor: str
    status: str
    parameters: dict = field(default_factory=dict)
    expected: object = None
    observed: object = None
    wall_time: float = 0.0

    def to_json(self) -> dict:
        # wall time goes to stderr only, so the JSON stays byte-identical across runs
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "parameters": self.parameters,
            "expected": self.expected,
            "observed": self.observed,
        }


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


TABLE_F_VECTORS = {
    5: (10, 35, 55, 40, 12, 1),
    6: (15, 75, 143, 111, 30, 1),
    7: (21, 147, 328, 282, 82, 1),
    8: (28, 266, 664, 616, 192, 1),
    9: (36, 450, 1217, 1191, 390, 1),
}


def exp_table1(seeds=(1, 2, 3), ns=(5, 6, 7, 8, 9), **_) -> ExperimentReport:
    observed, deviations = {}, []
    for n in ns:
        rows = {}
        for s in seeds:
            z = random_positive(4, n, s)
            fv = tuple(f_vector(exterior_cone(z, 2)))
            rows[str(s)] = list(fv)
            if fv != TABLE_F_VECTORS[n]:
                deviations.append({"n": n, "seed": s, "f_vector": list(fv), "witness_z": z.to_json()})
        observed[str(n)] = rows
    status = "PASS" if not deviations else "FINDING"
    obs = {"f_vectors": observed, "deviations": deviations}
    return ExperimentReport(
        "table1",
        "f-vectors of C_{2,2,n} for n = 5..9 (constancy in Z is conjectural)",
        status,
        {"k": 2, "m": 2, "n": list(ns), "seeds": list(seeds)},
        {str(n): list(TABLE_F_VECTORS[n]) for n in ns},
        obs,
    )


C226_NODES = (1, 3, 4, 7, 8, 9)


def exp_c226_counts(**_) -> ExperimentReport:
    z = vandermonde(C226_NODES, 4)
    m = mt.matroid_of(z, 2)
    bs = mt.bases(m)
    classes = {mt.graph_key(mt.make_graph(b)) for b in bs}
    total = comb(15, 6)
    obs = {"six_subsets": total, "zero": total - len(bs), "bases": len(bs), "classes": len(classes)}
    exp = {"six_subsets": 5005, "zero": 1660, "bases": 3345, "classes": 12}
    return ExperimentReport(
        "c226-counts", "maximal minors of the wedge square of a 4 x 6 Vandermonde matrix", _status(obs == exp),
        {"nodes": list(C226_NODES)}, exp, obs,
    )


DRIFT_BELOW = [(12, 23, 34, 45, 56), (12, 23, 34, 56, 16), (12, 16, 34, 45, 56)]
DRIFT_ABOVE = [(12, 16, 23, 34, 45), (12, 16, 23, 45, 56), (16, 23, 34, 45, 56)]
DRIFT_CYCLE = (12, 23, 34, 45, 56, 16)


def _edge_set(codes) -> frozenset:
    return frozenset(tuple(sorted(divmod(c, 10))) for c in codes)


def exp_c226_drift(**_) -> ExperimentReport:
    obs = {}
    for f in (Fraction(9), Fraction(47, 5), Fraction(10)):
        c = exterior_cone(vandermonde((1, 3, 4, 7, 8, f), 4), 2)
        facets = {frozenset(c.labels[r] for r in inc) for inc in c.incidence}
        obs[str(f)] = {
            "f_vector": f_vector(c),
            "below_simplices": [(_edge_set(s) in facets) for s in DRIFT_BELOW],
            "above_simplices": [(_edge_set(s) in facets) for s in DRIFT_ABOVE],
            "cyclic_facet": _edge_set(DRIFT_CYCLE) in facets,
        }
    ok = (
        all(obs["9"]["below_simplices"]) and not any(obs["9"]["above_simplices"]) and not obs["9"]["cyclic_facet"]
        and obs["47/5"]["cyclic_facet"] and not any(obs["47/5"]["below_simplices"] + obs["47/5"]["above_simplices"])
        and all(obs["10"]["above_simplices"]) and not any(obs["10"]["below_simplices"]) and not obs["10"]["cyclic_facet"]
        and obs["9"]["f_vector"] == obs["10"]["f_vector"]
    )
    return ExperimentReport(
        "c226-facet-drift", "facet substitution of C_{2,2,6} as the last node crosses 47/5", _status(ok),
        {"nodes": "1,3,4,7,8,f", "f": ["9", "47/5", "10"]},
        {"9": "three simplices", "47/5": "single cyclic facet", "10": "three other simplices"}, obs,
    )


def exp_basis_classes(**_) -> ExperimentReport:
    z = vandermonde(C226_NODES, 4)
    classes = {mt.graph_key(mt.make_graph(b)) for b in mt.bases(mt.matroid_of(z, 2))}
    types = mt.basis_types()
    obs = {"classes_n6": len(classes), "types_all_n": len(types)}
    exp = {"classes_n6": 12, "types_all_n": 47}
    return ExperimentReport(
        "basis-classes", "isomorphism classes of bases of W_{2,2,6} and types over all n", _status(obs == exp),
        {"nodes": list(C226_NODES)}, exp, obs,
    )


def exp_basis_poset(**_) -> ExperimentReport:
    poset = mt.basis_type_poset()
    maxima = poset.maximal()
    reach = poset.descendants(maxima)
    names = sorted(mt.graph_to_json(poset.nodes[i]) for i in maxima)
    obs = {"nodes": len(poset.nodes), "maximal": len(maxima), "generated": len(reach), "maxima": names,
           "acyclic": poset.is_acyclic()}
    ok = obs["nodes"] == 47 and obs["maximal"] == 3 and obs["generated"] == 47 and obs["acyclic"]
    return ExperimentReport(
        "basis-poset", "cutting poset of the 47 basis types with three maximal graphs", _status(ok), {},
        {"nodes": 47, "maximal": 3, "generated": 47}, obs,
    )


K4 = mt.make_graph(combinations(range(1, 5), 2))
HOUSE = mt.make_graph([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5)])
HEXAGON = mt.make_graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])


def exp_static_dynamic(**_) -> ExperimentReport:
    res = {name: mt.static_or_dynamic(g) for name, g in (("K4", K4), ("house", HOUSE), ("hexagon", HEXAGON))}
    obs = {
        name: {"verdict": r.verdict.value, "placements": r.labelings_checked, "witness": r.witness}
        for name, r in res.items()
    }
    ok = (
        res["K4"].verdict is mt.Verdict.STATIC
        and res["house"].verdict is mt.Verdict.STATIC
        and res["hexagon"].verdict is mt.Verdict.DYNAMIC
        and res["hexagon"].witness["vanishing_node"] == "47/5"
    )
    return ExperimentReport(
        "theorem-4-10", "static basis types have single-signed chart determinants; the hexagon is dynamic",
        _status(ok), {}, {"K4": "STATIC", "house": "STATIC", "hexagon": "DYNAMIC at 47/5"}, obs,
    )


def exp_schubert_n6(seed: int = 1, **_) -> ExperimentReport:
    z = random_positive(4, 6, seed)
    classes = classify_facets(z, 2)
    schubert = schubert_vertex_counts(classes)
    non = [f for f in classes if f.kind is Kind.NON_SCHUBERT]
    obs = {
        "facets": len(classes),
        "schubert_by_vertex_count": {str(k): v for k, v in schubert.items()},
        "non_schubert": len(non),
        "non_schubert_are_simplices": all(len(f.vertices) == 5 for f in non),
        "witnesses_meet_vertices": all(witness_meets_vertices(z, f) for f in classes if f.kind is Kind.SCHUBERT),
    }
    ok = (
        obs["facets"] == 30 and sorted(schubert.values()) == [3, 6, 6] and obs["non_schubert"] == 15
        and obs["non_schubert_are_simplices"] and obs["witnesses_meet_vertices"]
    )
    return ExperimentReport(
        "schubert-n6", "Schubert facet types (6,6,3) and 15 non-Schubert simplices of C_{2,2,6}", _status(ok),
        {"seed": seed}, {"facets": 30, "schubert_types": [6, 6, 3], "non_schubert": 15}, obs,
    )


def exp_schubert_k2m2(ns=(5, 6, 7, 8), seeds=(1, 2, 3), **_) -> ExperimentReport:
    obs, ok = {}, True
    for n in ns:
        for s in seeds:
            z = random_positive(4, n, s)
            found = {primitive_exterior(f.normal) for f in classify_facets(z, 2) if f.kind is Kind.SCHUBERT}
            predicted = predicted_schubert_normals(z)
            w = twist(z, 2, 2)
            cols = w.columns()
            transversal = all(
                int_det([[cols[i][r] for i in q] for r in range(4)]) != 0 for q in combinations(range(n), 4)
            )
            good = found == predicted and transversal and len(found) == comb(n, 2)
            ok &= good
            obs[f"{n}/{s}"] = {"schubert": len(found), "matches_bar_lines": found == predicted,
                               "transversal": transversal}
    return ExperimentReport(
        "schubert-theorem-k2m2", "Schubert facets of C_{2,2,n} are exactly the C(n,2) bar-line hyperplanes",
        _status(ok), {"n": list(ns), "seeds": list(seeds)}, "all Schubert normal sets equal the bar lines", obs,
    )


def exp_twist_duality(ns=(5, 6, 7, 8), seeds=(1, 2, 3), **_) -> ExperimentReport:
    obs, ok = {}, True
    for n in ns:
        for s in seeds:
            r = twist_duality_check(random_positive(4, n, s))
            ok &= r.equal and r.vertex_identity
            obs[f"{n}/{s}"] = r.to_json()
    return ExperimentReport(
        "twist-duality", "Schubert polytope of Z equals the dual of the exterior cyclic polytope of its twist",
        _status(ok), {"n": list(ns), "seeds": list(seeds)}, "equal cones and vertex identity", obs,
    )


C326_F = [20, 160, 675, 1659, 2469, 2227, 1173, 327, 38, 1]


def exp_c326(seed: int = 1, **_) -> ExperimentReport:
    z = random_positive(5, 6, seed)
    cone = exterior_cone(z, 3)
    fv = f_vector(cone)
    classes = classify_facets(z, 3, cone)
    counts = schubert_vertex_counts(classes)
    n_schubert = sum(counts.values())
    normals = {tuple(primitive(cone.facets[f.index])) for f in classes if f.kind is Kind.SCHUBERT}
    triples = twisted_triple_normals(z)
    tilde = schubert_polytope(z, 3, cone)
    f_tilde = f_vector(tilde)
    f_dual = f_vector(dual_cone(cone))
    obs = {
        "f_vector": fv,
        "schubert": n_schubert,
        "schubert_by_vertex_count": {str(k): v for k, v in counts.items()},
        "schubert_normals_are_twisted_triples": normals <= triples,
        "f_vector_schubert_polytope": f_tilde,
        "f_vector_dual": f_dual,
    }
    ok = (
        fv == C326_F and n_schubert == 20 and counts.get(14) == 12 and counts.get(12) == 2
        and f_tilde == f_dual and obs["schubert_normals_are_twisted_triples"]
    )
    return ExperimentReport(
        "c326", "f-vector and Schubert facets of C_{3,2,6}", _status(ok), {"k": 3, "m": 2, "n": 6, "seed": seed},
        {"f_vector": C326_F, "schubert": 20, "non_interval_families": {"14": 12, "12": 2}}, obs,
    )


def exp_positroid_circuits(ns=(5, 6, 7, 8), **_) -> ExperimentReport:
    obs, ok = {}, True
    for n in ns:
        found = mt.positroid_circuit_search(2, n)
        all_k4 = all(len(c) == 6 and len(mt.graph_vertices(c)) == 4 for c in found)
        ok &= len(found) == comb(n, 4) and all_k4
        obs[str(n)] = {"found": len(found), "all_k4": all_k4,
                       "vertex_sets": [mt.graph_vertices(c) for c in found]}
    return ExperimentReport(
        "positroid-circuits", "positroid circuits of H_2(n) are copies of K4", _status(ok), {"d": 2, "n": list(ns)},
        {str(n): comb(n, 4) for n in ns}, obs,
    )


def exp_linear_boundaries(ns=(6, 7, 8), seed: int = 1, **_) -> ExperimentReport:
    obs, ok = {}, True
    for n in ns:
        r = amp.linear_boundary_audit(random_positive(n - 2, n, seed))
        ok &= r.passing_are_k4_complements
        obs[str(n)] = r.to_json()
    return ExperimentReport(
        "linear-boundaries", "positroid facets of C_{2,n-4,n} are complements of K4", _status(ok),
        {"k": 2, "n": list(ns), "seed": seed}, "every passing facet is some F_ijkl", obs,
    )


def exp_separation(ns=(5, 6, 7, 8, 9), trials: int = 50, draws: int = 100000, seed: int = 1, **_) -> ExperimentReport:
    obs, ok = {}, True
    for n in ns:
        seeds = range(seed, seed + trials)
        passed = sum(amp.separation_certificate(random_positive(4, n, s)).passed for s in seeds)
        ok &= passed == trials
        obs[str(n)] = {"passed": passed, "trials": trials}
    hits = amp.rejection_search(random_positive(4, 6, 1), draws, seed=5)
    ok &= hits == 0
    obs["rejection_hits"] = hits
    return ExperimentReport(
        "separation", "a hyperplane separates T(positive orthant) from the positive orthant", _status(ok),
        {"n": list(ns), "trials": trials, "draws": draws, "seed": seed}, {"all_pairings_nonpositive": True, "rejection_hits": 0}, obs,
    )


def exp_oracle_equivalence(ns=(4, 5, 6, 7, 8), trials: int = 10000, seed: int = 7, samples: int = 1000, **_):
    obs, ok = {}, True
    for n in ns:
        z = random_positive(4, n, 1)
        r = amp.oracle_equivalence(z, trials, seed)
        bad_samples = 0
        for s in range(samples):
            y = amp.sample_amplituhedron(z, 2, seed * 100003 + s)
            if not (amp.member_bar(y, z) and amp.member_cone(y, z) and amp.member_signflip(y, z, 2)):
                bad_samples += 1
        ok &= r.disagreements == 0 and bad_samples == 0
        obs[str(n)] = r.to_json() | {"amplituhedron_samples_failing": bad_samples}
    return ExperimentReport(
        "oracle-equivalence", "bar-line, cone and sign-flip descriptions of A_{2,2,n} agree", _status(ok),
        {"n": list(ns), "trials": trials, "seed": seed, "samples": samples}, {"disagreements": 0}, obs,
    )


def exp_dual_amplituhedron(ns=(5, 6, 7, 8), trials: int = 10000, seed: int = 7, **_) -> ExperimentReport:
    obs, ok = {}, True
    for n in ns:
        r = amp.dual_equivalence(random_positive(4, n, 1), trials, seed)
        ok &= r.disagreements == 0
        obs[str(n)] = r.to_json()
    return ExperimentReport(
        "dual-amplituhedron", "zero-flip description equals the amplituhedron of the twisted matrix", _status(ok),
        {"n": list(ns), "trials": trials, "seed": seed}, {"disagreements": 0}, obs,
    )


def exp_w23n_circuits(**_) -> ExperimentReport:
    table = mt.schubert_circuit_table(5)
    star5 = mt.make_graph([(1, j) for j in range(2, 7)])
    obs = {"families": table, "five_star_is_circuit": mt.is_graph_circuit(star5, 5)}
    ok = all(row["is_circuit"] for row in table) and obs["five_star_is_circuit"]
    return ExperimentReport(
        "w23n-circuits", "circuits of W_{2,3,n} certified by Schubert conditions", _status(ok), {"k": 2, "m": 3},
        "each family yields a circuit at its minimal n", obs,
    )


def nonschubert_flat_report(seed: int = 1) -> dict:
    """Span, closure and normal of the 19-edge set on 15 columns for a random positive 5 x 15 matrix."""
    z = random_positive(5, 15, seed)
    m = mt.matroid_of(z, 2)
    edges = list(mt.STAR_PLUS_MATCHING_15)
    mask = m.mask(edges)
    rank = m.rank_mask(mask)
    closed = m.closure_mask(mask) == mask
    cols = [m.columns[m.index[e]] for e in edges]
    ker = kernel_basis(cols)
    normal = tuple(primitive(ker.entries[0])) if ker.rows == 1 else None
    decomposable = None
    if normal is not None:
        decomposable, _ = is_decomposable(normal_as_exterior(normal, 2, 5))
    return {
        "edges": len(edges),
        "rank": rank,
        "is_flat": closed,
        "normal_count": ker.rows,
        "decomposable": decomposable,
        "contains_five_star_circuit": m.is_circuit([(1, j) for j in range(2, 7)]),
    }


def exp_nonschubert_flat(seed: int = 1, **_) -> ExperimentReport:
    obs = nonschubert_flat_report(seed)
    ok = obs["rank"] == 9 and obs["is_flat"] and obs["normal_count"] == 1 and obs["decomposable"] is False \
        and obs["contains_five_star_circuit"]
    return ExperimentReport(
        "appendixB-nonexample", "a hyperplane of W_{2,3,15} containing the five-star need not be Schubert",
        _status(ok), {"k": 2, "m": 3, "n": 15, "seed": seed},
        {"rank": 9, "is_flat": True, "decomposable": False}, obs,
    )


REGISTRY: dict[str, Callable[..., ExperimentReport]] = {
    "table1": exp_table1,
    "c226-counts": exp_c226_counts,
    "c226-facet-drift": exp_c226_drift,
    "basis-classes": exp_basis_classes,
    "basis-poset": exp_basis_poset,
    "theorem-4-10": exp_static_dynamic,
    "schubert-n6": exp_schubert_n6,
    "schubert-theorem-k2m2": exp_schubert_k2m2,
    "twist-duality": exp_twist_duality,
    "c326": exp_c326,
    "positroid-circuits": exp_positroid_circuits,
    "linear-boundaries": exp_linear_boundaries,
    "separation": exp_separation,
    "oracle-equivalence": exp_oracle_equivalence,
    "dual-amplituhedron": exp_dual_amplituhedron,
    "w23n-circuits": exp_w23n_circuits,
    "appendixB-nonexample": exp_nonschubert_flat,
}


def run_experiment(name: str, **options) -> ExperimentReport:
    """Run a registry experiment; wall time is recorded and echoed to stderr."""
    if name not in REGISTRY:
        raise UnknownExperiment(f"unknown experiment {name!r}; choose from: {', '.join(REGISTRY)}")
    start = time.perf_counter()
    report = REGISTRY[name](**{k: v for k, v in options.items() if v is not None})
    report.wall_time = time.perf_counter() - start
    print(f"[{report.status}] {name}: {report.anchor} ({report.wall_time:.1f}s)", file=sys.stderr)
    return report
