"""Linear matroids of wedge powers, graph encodings for k = 2, and their enumerations.

For k = 2 a ground element {i, j} is read as the edge ij of the complete graph
on the column labels, so subsets of the ground set are graphs.  Graphs are
frozensets of sorted pairs; the vertex set is implicit.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence

import numpy as np

from .rational import (
    MultiPoly,
    SignPattern,
    coefficient_sign_pattern,
    int_det,
    int_rank,
    poly_det,
    primitive,
)
from .twistor import subsets, wedge_power_columns
from .zmatrix import vandermonde

__all__ = [
    "LinearMatroid",
    "EdgeGraph",
    "matroid_of",
    "generic_matroid",
    "bases",
    "circuits",
    "hyperplane_flats",
    "cut",
    "glue",
    "graph_distance",
    "canonical_graph",
    "basis_types",
    "BasisTypePoset",
    "basis_type_poset",
    "Verdict",
    "StaticResult",
    "static_or_dynamic",
    "hexagon_polynomial",
    "positroid_table_4",
    "locally_positroid",
    "positroid_circuit_search",
    "make_graph",
    "graph_vertices",
    "graph_to_json",
    "graph_key",
    "independent_graphs",
    "is_graph_circuit",
    "circuit_types",
    "circuit_generators",
    "gluing_closure",
    "SchubertFamily",
    "W23_FAMILIES",
    "family_pool",
    "find_family_circuit",
    "schubert_circuit_table",
    "STAR_PLUS_MATCHING_15",
]

EdgeGraph = frozenset  # frozenset[tuple[int, int]]


def make_graph(edges: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def graph_vertices(g: Iterable[tuple[int, int]]) -> list[int]:
    return sorted({v for e in g for v in e})


def graph_to_json(g) -> list[list[int]]:
    return [list(e) for e in sorted(g)]


# ---------------------------------------------------------------------------
# Linear matroids
# ---------------------------------------------------------------------------


class LinearMatroid:
    """Column matroid with a memoised exact rank oracle.

    Subsets are passed as iterables of ground labels or as bitmasks over the
    ground positions.
    """

    def __init__(self, ground: Sequence, columns: Sequence[Sequence[int]]):
        if len(ground) != len(columns):
            raise ValueError("one column per ground element")
        self.ground = list(ground)
        self.index = {g: i for i, g in enumerate(self.ground)}
        self.columns = [tuple(primitive(c)) for c in columns]
        self._cache: dict[int, int] = {0: 0}
        self.rank_total = self.rank_mask((1 << len(self.ground)) - 1)

    def __len__(self) -> int:
        return len(self.ground)

    def mask(self, subset: Iterable) -> int:
        m = 0
        for s in subset:
            m |= 1 << self.index[tuple(s) if isinstance(s, list) else s]
        return m

    def labels(self, mask: int) -> list:
        return [self.ground[i] for i in range(len(self.ground)) if mask >> i & 1]

    def rank_mask(self, mask: int) -> int:
        r = self._cache.get(mask)
        if r is None:
            cols = [self.columns[i] for i in range(len(self.ground)) if mask >> i & 1]
            r = int_rank(cols) if cols else 0
            self._cache[mask] = r
        return r

    def rank(self, subset: Iterable) -> int:
        return self.rank_mask(self.mask(subset))

    def is_independent(self, subset: Iterable) -> bool:
        m = self.mask(subset)
        return self.rank_mask(m) == bin(m).count("1")

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        for i in range(len(self.ground)):
            if not mask >> i & 1 and self.rank_mask(mask | 1 << i) == r:
                out |= 1 << i
        return out

    def closure(self, subset: Iterable) -> list:
        return self.labels(self.closure_mask(self.mask(subset)))

    def is_circuit(self, subset: Iterable) -> bool:
        m = self.mask(subset)
        size = bin(m).count("1")
        if self.rank_mask(m) != size - 1:
            return False
        return all(self.rank_mask(m & ~(1 << i)) == size - 1 for i in range(len(self.ground)) if m >> i & 1)


def matroid_of(z, k: int) -> LinearMatroid:
    """Matroid of the columns of the k-th wedge power, ground = lex k-subsets."""
    n = len(z.columns()) if hasattr(z, "columns") else len(z[0])
    return LinearMatroid(list(subsets(n, k)), wedge_power_columns(z, k))


def generic_matroid(k: int, m: int, n: int, seed: int = 0, bound: int = 10**6) -> LinearMatroid:
    """Wedge power matroid for a random integer matrix (generic with overwhelming probability)."""
    rng = random.Random(seed)
    z = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k + m)]
    return LinearMatroid(list(subsets(n, k)), wedge_power_columns(z, k))


def bases(m: LinearMatroid, guard: int = 20) -> list[list]:
    """All bases; ground size is capped since the enumeration is exhaustive."""
    if len(m) > guard:
        raise ValueError(f"ground set of size {len(m)} exceeds {guard}; enumerate in a streaming loop instead")
    r = m.rank_total
    out = []
    for combo in combinations(range(len(m)), r):
        cols = [m.columns[i] for i in combo]
        if int_det(cols) != 0:
            out.append([m.ground[i] for i in combo])
    return out


def circuits(m: LinearMatroid, max_size: int) -> list[list]:
    """Minimal dependent sets of size <= max_size, grown level by level from independent sets."""
    n = len(m)
    out = []
    level = {0}
    for size in range(1, max_size + 1):
        nxt = set()
        for base in level:
            top = base.bit_length()
            for e in range(top, n):
                cand = base | 1 << e
                # every (size-1)-subset must be independent, i.e. already in the level
                if any(cand & ~(1 << i) not in level for i in range(e) if cand >> i & 1):
                    continue
                if m.rank_mask(cand) == size:
                    nxt.add(cand)
                else:
                    out.append(cand)
        level = nxt
        if not level:
            break
    return [m.labels(c) for c in sorted(out)]


def hyperplane_flats(m: LinearMatroid, guard: int = 40) -> list[list]:
    """Flats of rank r-1, as closures of independent (r-1)-sets."""
    if len(m) > guard:
        raise ValueError(f"ground set of size {len(m)} exceeds {guard}")
    r = m.rank_total
    found: list[int] = []
    for combo in combinations(range(len(m)), r - 1):
        mask = 0
        for i in combo:
            mask |= 1 << i
        if any(mask & f == mask for f in found):
            continue
        if m.rank_mask(mask) != r - 1:
            continue
        found.append(m.closure_mask(mask))
    return [m.labels(f) for f in found]


# ---------------------------------------------------------------------------
# Graph operations
# ---------------------------------------------------------------------------


def _adjacency(g) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for a, b in g:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def graph_distance(g, u: int, v: int) -> float:
    adj = _adjacency(g)
    if u == v:
        return 0
    seen = {u}
    frontier = [u]
    dist = 0
    while frontier:
        dist += 1
        nxt = []
        for x in frontier:
            for y in adj.get(x, ()):
                if y == v:
                    return dist
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return float("inf")


def cut(g, e: Sequence[int], v: int, new_vertex: int | None = None) -> frozenset:
    """Replace edge uv by uv' where v' is a fresh vertex (default: one past the largest label)."""
    e = (min(e), max(e))
    if e not in g:
        raise ValueError(f"edge {e} not in graph")
    if v not in e:
        raise ValueError(f"{v} is not an endpoint of {e}")
    u = e[0] if e[1] == v else e[1]
    if new_vertex is None:
        new_vertex = max(graph_vertices(g)) + 1
    return make_graph([x for x in g if x != e] + [(u, new_vertex)])


def glue(g, u: int, v: int) -> frozenset:
    """Identify v with u; they must be at distance at least three so the result stays simple."""
    if graph_distance(g, u, v) < 3:
        raise ValueError(f"vertices {u} and {v} are closer than distance 3")
    return make_graph([tuple(u if x == v else x for x in e) for e in g])


def _refine(adj: dict[int, set[int]], colors: dict[int, tuple]) -> dict[int, int]:
    """Equitable refinement; colours are re-ranked to 0..c-1 in a label-independent way."""
    cur = {v: c for v, c in colors.items()}
    keys = sorted(set(cur.values()))
    cur = {v: keys.index(c) for v, c in cur.items()}
    while True:
        sig = {v: (cur[v], tuple(sorted(cur[u] for u in adj[v]))) for v in cur}
        keys = sorted(set(sig.values()))
        rank = {s: i for i, s in enumerate(keys)}
        nxt = {v: rank[sig[v]] for v in cur}
        if len(keys) == len(set(cur.values())):
            return nxt
        cur = nxt


def _canon_connected(edges: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    adj = _adjacency(edges)
    best: list = [None]

    def search(colors: dict[int, int]):
        ncol = len(set(colors.values()))
        if ncol == len(colors):
            relabel = {v: c + 1 for v, c in colors.items()}
            form = tuple(sorted(tuple(sorted((relabel[a], relabel[b]))) for a, b in edges))
            if best[0] is None or form < best[0]:
                best[0] = form
            return
        # individualise each vertex of the first smallest non-singleton cell
        cells: dict[int, list[int]] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = min((c for c, vs in cells.items() if len(vs) > 1), key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            ind = {u: (c, 0 if u == v else 1) if c == target else (c, 0) for u, c in colors.items()}
            search(_refine(adj, ind))

    search(_refine(adj, {v: (len(adj[v]),) for v in adj}))
    return best[0]


def canonical_graph(g, guard: int = 12) -> frozenset:
    """Canonical representative of the isomorphism class (connected components handled separately)."""
    adj = _adjacency(g)
    seen: set[int] = set()
    comps = []
    for v in sorted(adj):
        if v in seen:
            continue
        stack = [v]
        comp = set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        if len(comp) > guard:
            raise ValueError(f"component with {len(comp)} vertices exceeds guard {guard}")
        comps.append([e for e in g if e[0] in comp])
    forms = sorted((len({x for e in c for x in e}), _canon_connected(c)) for c in comps)
    out = []
    offset = 0
    for nv, form in forms:
        out.extend((a + offset, b + offset) for a, b in form)
        offset += nv
    return frozenset(out)


def graph_key(g) -> tuple:
    """Hashable sorted edge tuple of the canonical form."""
    return tuple(sorted(canonical_graph(g)))


# ---------------------------------------------------------------------------
# Basis types of W_{2,2,n}
# ---------------------------------------------------------------------------


def _independent_in_generic(g, testers: list[Callable]) -> bool:
    return any(t(g) for t in testers)


def _generic_tester(seed: int, rows: int = 4, max_vertices: int = 14) -> Callable:
    rng = random.Random(seed)
    cols = [[rng.randint(-10**6, 10**6) for _ in range(rows)] for _ in range(max_vertices)]

    def test(g) -> bool:
        verts = graph_vertices(g)
        pos = {v: i for i, v in enumerate(verts)}
        vecs = []
        for a, b in g:
            x, y = cols[pos[a]], cols[pos[b]]
            vecs.append(tuple(x[i] * y[j] - x[j] * y[i] for i, j in combinations(range(rows), 2)))
        return int_rank(vecs) == len(vecs)

    return test


def independent_graphs(edge_count: int, rows: int = 4, seeds: Sequence[int] = (11, 23)) -> list[frozenset]:
    """Canonical graphs with ``edge_count`` edges (no isolated vertices) independent in W_{2,rows-2,n}.

    Independence is tested against random integer matrices; generic rank is
    the maximum over realisations, so one independent realisation suffices.
    """
    testers = [_generic_tester(s, rows) for s in seeds]
    level = {graph_key([]): frozenset()}
    for _ in range(edge_count):
        nxt = {}
        for g in level.values():
            verts = graph_vertices(g)
            nv = len(verts)
            fresh1, fresh2 = nv + 1, nv + 2
            cands = [(a, b) for a, b in combinations(verts, 2) if (a, b) not in g]
            cands += [(a, fresh1) for a in verts]
            cands.append((fresh1, fresh2))
            for e in cands:
                h = frozenset(g | {e})
                key = graph_key(h)
                if key in nxt:
                    continue
                if _independent_in_generic(h, testers):
                    nxt[key] = frozenset(key)
        level = nxt
    return [level[k] for k in sorted(level)]


def basis_types() -> list[frozenset]:
    """The isomorphism types of bases of W_{2,2,n} over all n (6-edge independent graphs)."""
    return independent_graphs(6, rows=4)


@dataclass
class BasisTypePoset:
    nodes: list[frozenset]
    covers: list[tuple[int, int]]  # (i, j): node j is a cut of node i

    def maximal(self) -> list[int]:
        below = {j for _, j in self.covers}
        return [i for i in range(len(self.nodes)) if i not in below]

    def descendants(self, start: Iterable[int]) -> set[int]:
        children: dict[int, list[int]] = {}
        for i, j in self.covers:
            children.setdefault(i, []).append(j)
        seen = set(start)
        stack = list(seen)
        while stack:
            x = stack.pop()
            for y in children.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def is_acyclic(self) -> bool:
        # cutting adds a vertex, so every cover strictly increases the vertex count
        return all(len(graph_vertices(self.nodes[j])) > len(graph_vertices(self.nodes[i])) for i, j in self.covers)


def basis_type_poset(types: Sequence[frozenset] | None = None) -> BasisTypePoset:
    nodes = list(types) if types is not None else basis_types()
    index = {graph_key(g): i for i, g in enumerate(nodes)}
    covers = set()
    for i, g in enumerate(nodes):
        for e in g:
            for v in e:
                h = cut(g, e, v)
                j = index.get(graph_key(h))
                if j is not None and j != i:
                    covers.add((i, j))
    return BasisTypePoset(nodes, sorted(covers))


# ---------------------------------------------------------------------------
# Static versus dynamic bases
# ---------------------------------------------------------------------------


class Verdict(enum.Enum):
    STATIC = "STATIC"
    DYNAMIC = "DYNAMIC"
    UNKNOWN = "UNKNOWN"


@dataclass
class StaticResult:
    verdict: Verdict
    reason: str
    witness: dict | None = None
    labelings_checked: int = 0


CHART_VARS = ("x1", "x2", "x3", "x4")


def chart_matrix() -> list[list[MultiPoly]]:
    """[I_4 | (-x1, x2, -x3, x4)], a positive point of Gr(4,5) for positive x."""
    const = lambda c: MultiPoly.constant(CHART_VARS, c)  # noqa: E731
    x = [MultiPoly.var(CHART_VARS, v) for v in CHART_VARS]
    last = [-x[0], x[1], -x[2], x[3]]
    return [[const(int(i == j)) for j in range(4)] + [last[i]] for i in range(4)]


def _wedge_column(cols: list[list[MultiPoly]], a: int, b: int) -> list[MultiPoly]:
    x, y = cols[a], cols[b]
    return [x[i] * y[j] - x[j] * y[i] for i, j in combinations(range(4), 2)]


def chart_determinant(edges: Sequence[tuple[int, int]]) -> MultiPoly:
    """det of the wedge columns Z_a ^ Z_b for the given edges on the chart (vertices 1..5)."""
    z = chart_matrix()
    cols = [[z[r][c] for r in range(4)] for c in range(5)]
    wedge_cols = [_wedge_column(cols, a - 1, b - 1) for a, b in edges]
    return poly_det([[wedge_cols[j][i] for j in range(6)] for i in range(6)])


def hexagon_polynomial(z, labels: Sequence[int] = (1, 2, 3, 4, 5, 6)):
    """det[Z_12 Z_23 Z_34 Z_45 Z_56 Z_16] for the columns picked by ``labels`` (in cycle order)."""
    cols = z.columns()
    vs = [cols[i - 1] for i in labels]
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]
    wcols = []
    for a, b in pairs:
        x, y = vs[a], vs[b]
        wcols.append(tuple(x[i] * y[j] - x[j] * y[i] for i, j in combinations(range(4), 2)))
    from .rational import det

    return det([[c[i] for c in wcols] for i in range(6)])


HEXAGON_WITNESS_NODES = (1, 3, 4, 7, 8)
HEXAGON_ROOT = Fraction(47, 5)


def _labelings(g) -> list[dict[int, int]]:
    verts = graph_vertices(g)
    return [dict(zip(verts, p)) for p in permutations(range(1, 6), len(verts))]


def static_or_dynamic(g, poset: BasisTypePoset | None = None) -> StaticResult:
    """Decide whether a basis type of W_{2,2,n} stays a basis for every positive Z.

    Graphs on at most five vertices are checked symbolically on a positive
    chart of Gr(4,5) for every placement of their vertices.  A graph that is
    a cut of a static type is static.  Otherwise a sign change of the
    determinant along the Vandermonde family with nodes (1,3,4,7,8,f) is
    searched for, which exhibits a positive Z where the basis degenerates.
    """
    g = frozenset(graph_key(g))
    if len(g) != 6:
        raise ValueError("basis types of W_{2,2,n} have six edges")
    verts = graph_vertices(g)
    if len(verts) <= 5:
        patterns = set()
        count = 0
        seen_edge_sets = set()
        for lab in _labelings(g):
            edges = tuple(sorted(tuple(sorted((lab[a], lab[b]))) for a, b in g))
            if edges in seen_edge_sets:
                continue
            seen_edge_sets.add(edges)
            count += 1
            patterns.add(coefficient_sign_pattern(chart_determinant(edges)))
        if patterns <= {SignPattern.ALL_POSITIVE, SignPattern.ALL_NEGATIVE}:
            return StaticResult(Verdict.STATIC, "single-signed chart determinant for every placement", None, count)
        if SignPattern.ZERO in patterns:
            return StaticResult(Verdict.UNKNOWN, "some placement is not a basis", None, count)
        return StaticResult(Verdict.UNKNOWN, "mixed coefficient signs", None, count)
    if poset is not None:
        idx = {graph_key(h): i for i, h in enumerate(poset.nodes)}
        me = idx[tuple(sorted(g))]
        parents = [i for i, j in poset.covers if j == me]
        for p in parents:
            res = static_or_dynamic(poset.nodes[p], poset)
            if res.verdict is Verdict.STATIC:
                return StaticResult(Verdict.STATIC, f"cut of a static type {graph_to_json(poset.nodes[p])}", None)
    if len(verts) == 6:
        witness = _dynamic_witness(g)
        if witness is not None:
            return StaticResult(Verdict.DYNAMIC, "determinant changes sign along a positive family", witness)
    return StaticResult(Verdict.UNKNOWN, "no certificate found")


def _cycle_order(g) -> list[int] | None:
    """Vertices in traversal order if g is a single cycle through all of them."""
    adj = _adjacency(g)
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    start = min(adj)
    order, prev = [start], None
    while True:
        cur = order[-1]
        nxt = min(v for v in adj[cur] if v != prev) if prev is None else next(v for v in adj[cur] if v != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev = cur
    return order if len(order) == len(adj) else None


def _dynamic_witness(g) -> dict | None:
    verts = graph_vertices(g)
    lo = vandermonde(HEXAGON_WITNESS_NODES + (9,), 4)
    hi = vandermonde(HEXAGON_WITNESS_NODES + (10,), 4)
    candidates = []
    cyc = _cycle_order(g)
    if cyc is not None:
        # the labelling that follows the cycle gives the hexagon 12, 23, ..., 16
        candidates.append(dict(zip(cyc, range(1, 7))))
    candidates.extend(dict(zip(verts, p)) for p in permutations(range(1, 7)))
    for lab in candidates:
        edges = [tuple(sorted((lab[a], lab[b]))) for a, b in g]

        def d(z):
            cols = z.columns()
            w = [tuple(cols[a - 1][i] * cols[b - 1][j] - cols[a - 1][j] * cols[b - 1][i] for i, j in combinations(range(4), 2)) for a, b in edges]
            return int_det(w)

        a, b = d(lo), d(hi)
        if a * b < 0:
            root = _known_root(edges)
            return {
                "edges": graph_to_json(edges),
                "nodes_below": [str(x) for x in HEXAGON_WITNESS_NODES + (9,)],
                "nodes_above": [str(x) for x in HEXAGON_WITNESS_NODES + (10,)],
                "det_below": a,
                "det_above": b,
                "vanishing_node": str(root) if root is not None else None,
            }
    return None


def _known_root(edges) -> Fraction | None:
    """The root in (9, 10) of the last-node determinant if it is the known hexagon root."""
    z = vandermonde(HEXAGON_WITNESS_NODES + (HEXAGON_ROOT,), 4)
    cols = z.columns()
    from .rational import det

    w = [[cols[a - 1][i] * cols[b - 1][j] - cols[a - 1][j] * cols[b - 1][i] for i, j in combinations(range(4), 2)] for a, b in edges]
    return HEXAGON_ROOT if det(w) == 0 else None


# ---------------------------------------------------------------------------
# Positroid filters
# ---------------------------------------------------------------------------


def positroid_table_4(bound: int = 2) -> list[frozenset]:
    """Edge sets of rank-2 positroids on the cyclically ordered set {1,2,3,4}.

    Brute force over 2x4 integer matrices with entries in [-bound, bound]: keep
    rank-2 matrices whose six ordered minors are all nonnegative and record
    which minors are nonzero.
    """
    vals = np.arange(-bound, bound + 1)
    grid = np.array(np.meshgrid(*([vals] * 8), indexing="ij")).reshape(8, -1).T
    top, bot = grid[:, :4], grid[:, 4:]
    pairs = list(combinations(range(4), 2))
    minors = np.stack([top[:, i] * bot[:, j] - top[:, j] * bot[:, i] for i, j in pairs], axis=1)
    ok = (minors >= 0).all(axis=1) & (minors != 0).any(axis=1)
    patterns = np.unique(minors[ok] != 0, axis=0)
    out = set()
    for row in patterns:
        out.add(frozenset((i + 1, j + 1) for (i, j), nz in zip(pairs, row) if nz))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _table_lookup(table: Iterable[frozenset]) -> set[int]:
    """Bit-encoded induced subgraphs on positions 0..3 (edge (i,j) -> bit of its lex index)."""
    pairs = list(combinations(range(1, 5), 2))
    out = set()
    for s in table:
        out.add(sum(1 << pairs.index(e) for e in s))
    return out


def locally_positroid(g, n: int, table: Iterable[frozenset] | None = None, allow_low_rank: bool = True) -> bool:
    """Every induced subgraph on four vertices (cyclic order inherited from 1..n) is in the table.

    With ``allow_low_rank`` the empty graph is accepted too: a restriction of
    rank below two has no 2-element bases.
    """
    allowed = _table_lookup(table if table is not None else positroid_table_4())
    if allow_low_rank:
        allowed.add(0)
    for quad in combinations(range(1, n + 1), 4):
        code = 0
        for b, (x, y) in enumerate(combinations(range(4), 2)):
            if (quad[x], quad[y]) in g:
                code |= 1 << b
        if code not in allowed:
            return False
    return True


def positroid_circuit_search(d: int = 2, n: int = 6, seed: int = 5, guard: int = 9) -> list[frozenset]:
    """Circuits C of the hyperconnectivity matroid H_d(n) whose complement is locally positroid.

    H_d(n) is the dual of W_{2,n-d-2,n}; C is a circuit there exactly when the
    complementary edge set is a hyperplane of W_{2,n-d-2,n}.  Candidates are
    built vertex by vertex, pruning on the four-vertex positroid filter, and
    must have minimum degree at least d + 1.
    """
    if n > guard:
        raise ValueError(f"n={n} exceeds the search guard {guard}")
    m = n - d - 2
    if m < 1:
        raise ValueError("need n >= d + 3")
    mat = generic_matroid(2, m, n, seed)
    allowed = _table_lookup(positroid_table_4()) | {0}
    pairs4 = list(combinations(range(4), 2))
    all_edges = list(combinations(range(1, n + 1), 2))
    full = frozenset(all_edges)

    def quad_ok(comp: set, j: int) -> bool:
        # four-vertex subsets whose largest element is j
        for rest in combinations(range(1, j), 3):
            quad = rest + (j,)
            code = 0
            for b, (x, y) in enumerate(pairs4):
                if (quad[x], quad[y]) not in comp:
                    code |= 1 << b
            if code not in allowed:
                return False
        return True

    results = []

    def extend(j: int, comp: set):
        if j > n:
            if not comp:
                return
            deg: dict[int, int] = {}
            for a, b in comp:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if min(deg.values()) < d + 1:
                return
            hyper = full - comp
            hm = mat.mask(hyper)
            r = mat.rank_total
            if mat.rank_mask(hm) != r - 1:
                return
            if all(mat.rank_mask(hm | 1 << mat.index[e]) == r for e in comp):
                results.append(frozenset(comp))
            return
        lower = list(range(1, j))
        for bits in range(1 << len(lower)):
            new = {(lower[t], j) for t in range(len(lower)) if bits >> t & 1}
            comp2 = comp | new
            if quad_ok(comp2, j):
                extend(j + 1, comp2)

    extend(1, set())
    return sorted(results, key=lambda s: sorted(s))


# ---------------------------------------------------------------------------
# Circuit types and generators under gluing
# ---------------------------------------------------------------------------


def _generically_independent(g, testers: list[Callable]) -> bool:
    return not g or _independent_in_generic(g, testers)


def is_graph_circuit(g, rows: int = 4, seeds: Sequence[int] = (11, 23)) -> bool:
    """Dependent in W_{2,rows-2,n} while every single-edge deletion is independent."""
    testers = [_generic_tester(s, rows, max_vertices=max(14, len(graph_vertices(g)))) for s in seeds]
    if _generically_independent(g, testers):
        return False
    return all(_generically_independent(g - {e}, testers) for e in g)


def circuit_types(rows: int = 4, max_vertices: int = 7) -> list[frozenset]:
    """Isomorphism types of circuits of W_{2,rows-2,n} with at most ``max_vertices`` vertices.

    A circuit with s edges minus any edge is an independent graph, so every
    circuit type appears as an independent (s-1)-edge graph plus one edge.
    """
    testers = [_generic_tester(s, rows) for s in (11, 23)]
    rank = rows * (rows - 1) // 2
    found: dict[tuple, frozenset] = {}
    for size in range(2, rank + 2):
        for g in independent_graphs(size - 1, rows):
            verts = graph_vertices(g)
            nv = len(verts)
            cands = [(a, b) for a, b in combinations(verts, 2) if (a, b) not in g]
            cands += [(a, nv + 1) for a in verts] + [(nv + 1, nv + 2)]
            for e in cands:
                h = frozenset(g | {e})
                if len(graph_vertices(h)) > max_vertices:
                    continue
                key = graph_key(h)
                if key in found or _generically_independent(h, testers):
                    continue
                if all(_generically_independent(h - {f}, testers) for f in h):
                    found[key] = frozenset(key)
    return [found[k] for k in sorted(found, key=lambda k: (len(k), k))]


def circuit_generators(types: Sequence[frozenset], rows: int = 4) -> list[frozenset]:
    """Circuit types none of whose proper cuts is again a circuit.

    Cutting at a vertex of degree one only renames it, so those cuts are skipped.
    """
    out = []
    for g in types:
        adj = _adjacency(g)
        proper = [cut(g, e, v) for e in g for v in e if len(adj[v]) > 1]
        if not any(is_graph_circuit(h, rows) for h in proper):
            out.append(g)
    return out


def gluing_closure(generators: Sequence[frozenset], max_vertices: int) -> set[tuple]:
    """Canonical keys of all graphs reachable from the generators by gluing, down to any vertex count.

    Gluing lowers the vertex count, so graphs above ``max_vertices`` are kept
    as intermediates but only those within the bound are reported.
    """
    seen = {graph_key(g) for g in generators}
    stack = list(seen)
    while stack:
        g = frozenset(stack.pop())
        verts = graph_vertices(g)
        for u, v in combinations(verts, 2):
            if graph_distance(g, u, v) < 3:
                continue
            key = graph_key(glue(g, u, v))
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return {k for k in seen if len(graph_vertices(k)) <= max_vertices}


# ---------------------------------------------------------------------------
# Circuits of W_{2,3,n} certified by Schubert conditions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchubertFamily:
    """Lines meeting a subspace built from columns (labels 0..n-1 as in the drawing).

    ``spans`` lists column sets; the subspace is the intersection of their
    spans.  ``meet_at_least`` is how many of ``alternatives`` a line must meet
    when the condition is a choice among several subspaces.
    """

    name: str
    vertices: int
    size: int
    spans: tuple[tuple[int, ...], ...] = ()
    alternatives: tuple[tuple[tuple[int, ...], ...], ...] = ()
    meet_at_least: int = 1


W23_FAMILIES = (
    SchubertFamily("i: lines through the point 0", 6, 5, spans=((0,),)),
    SchubertFamily("ii: lines meeting the line 05", 6, 8, spans=((0, 5),)),
    SchubertFamily(
        "iii: lines meeting two of the planes (j456) & (0123)",
        7,
        9,
        alternatives=tuple(((j, 4, 5, 6), (0, 1, 2, 3)) for j in (3, 2, 1, 0)),
        meet_at_least=2,
    ),
    SchubertFamily("iv: lines meeting the plane (0146) & (2357)", 8, 10, spans=((0, 1, 4, 6), (2, 3, 5, 7))),
    SchubertFamily("v: lines meeting the plane (0123) & (4567)", 8, 10, spans=((0, 1, 2, 3), (4, 5, 6, 7))),
    SchubertFamily("vi: lines meeting the plane (0567) & (0 8 9 10)", 11, 10, spans=((0, 5, 6, 7), (0, 8, 9, 10))),
    SchubertFamily("vii: lines meeting the plane (059)", 11, 10, spans=((0, 5, 9),)),
)


def _generic_columns(rows: int, n: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(-10**6, 10**6) for _ in range(rows)] for _ in range(n)]


def _span_intersection(cols: list[list[int]], groups: Sequence[Sequence[int]]) -> list[tuple]:
    """Basis of the intersection of the spans of the column groups."""
    from .rational import kernel_basis

    rows = len(cols[0])
    basis = [tuple(1 if i == j else 0 for i in range(rows)) for j in range(rows)]
    for grp in groups:
        # vectors of the current basis combination lying in span(grp): solve via kernel of [basis | -grp]
        mat = [[b[i] for b in basis] + [-cols[v][i] for v in grp] for i in range(rows)]
        ker = kernel_basis(mat)
        if ker.rows == 0:
            return []
        new = []
        for coeffs in ker.entries:
            vec = [sum(c * b[i] for c, b in zip(coeffs[: len(basis)], basis)) for i in range(rows)]
            new.append(vec)
        keep = []
        for v in new:
            if int_rank([list(primitive(x)) for x in keep + [v]]) > len(keep):
                keep.append(tuple(primitive(v)))
        basis = keep
    return basis


def _meets(a: Sequence[int], b: Sequence[int], subspace: list[tuple]) -> bool:
    if not subspace:
        return False
    vecs = [list(a), list(b)] + [list(s) for s in subspace]
    return int_rank(vecs) < 2 + len(subspace)


def family_pool(fam: SchubertFamily, rows: int = 5, seed: int = 7) -> list[tuple[int, int]]:
    """Edges (0-based labels) whose lines meet the family's subspace for a generic matrix."""
    cols = _generic_columns(rows, fam.vertices, seed)
    if fam.spans:
        subs = [_span_intersection(cols, fam.spans)]
        need = 1
    else:
        subs = [_span_intersection(cols, alt) for alt in fam.alternatives]
        need = fam.meet_at_least
    pool = []
    for a, b in combinations(range(fam.vertices), 2):
        if sum(_meets(cols[a], cols[b], s) for s in subs) >= need:
            pool.append((a, b))
    return pool


def find_family_circuit(fam: SchubertFamily, rows: int = 5, seed: int = 7) -> frozenset | None:
    """A circuit of W_{2,rows-2,n} of the family's size inside its pool, touching every vertex.

    Edges use the 0-based labels of the drawing.  Depth-first search keeps
    the chosen edges independent until the last one, which must create a
    dependency that every single deletion removes.
    """
    pool = family_pool(fam, rows, seed)
    cols = _generic_columns(rows, fam.vertices, seed + 1)
    pairs = list(combinations(range(rows), 2))

    def vec(e):
        x, y = cols[e[0]], cols[e[1]]
        return [x[i] * y[j] - x[j] * y[i] for i, j in pairs]

    vecs = {e: vec(e) for e in pool}
    target = fam.size
    all_v = set(range(fam.vertices))

    def search(start: int, chosen: list):
        covered = {v for e in chosen for v in e}
        slots = target - len(chosen)
        if len(all_v - covered) > 2 * slots:
            return None
        if slots == 0:
            return None
        for idx in range(start, len(pool)):
            e = pool[idx]
            cand = chosen + [e]
            r = int_rank([vecs[x] for x in cand])
            if len(cand) < target:
                if r == len(cand):
                    res = search(idx + 1, cand)
                    if res is not None:
                        return res
            elif r < len(cand) and {v for x in cand for v in x} == all_v:
                if all(int_rank([vecs[x] for x in cand if x != f]) == len(cand) - 1 for f in cand):
                    return frozenset(cand)
        return None

    return search(0, [])


def schubert_circuit_table(rows: int = 5) -> list[dict]:
    """Reconstructed representative circuits for each Schubert family, with checks in 1-based labels."""
    out = []
    for fam in W23_FAMILIES:
        c = find_family_circuit(fam, rows)
        g = make_graph((a + 1, b + 1) for a, b in c) if c is not None else None
        out.append(
            {
                "family": fam.name,
                "vertices": fam.vertices,
                "size": fam.size,
                "graph": graph_to_json(g) if g is not None else None,
                "is_circuit": bool(g is not None and is_graph_circuit(g, rows)),
            }
        )
    return out


STAR_PLUS_MATCHING_15 = tuple(
    sorted({(1, j) for j in range(2, 16)} | {(6, 7), (8, 9), (10, 11), (12, 13), (14, 15)})
)
