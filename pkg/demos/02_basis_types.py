"""Count bases of the wedge-square matroid and sort them into graph types.

A 6-subset of the 15 lines (ij) is a basis when the 6 x 6 determinant of the
corresponding wedge columns is nonzero; reading (ij) as an edge turns each
basis into a graph.  The script counts bases, groups them up to relabelling,
builds the cutting poset of all 47 types and decides which types are static.
"""

from excyclic import matroid as mt
from excyclic.zmatrix import vandermonde

if __name__ == "__main__":
    z = vandermonde((1, 3, 4, 7, 8, 9), 4)
    bases = mt.bases(mt.matroid_of(z, 2))
    classes = {mt.graph_key(mt.make_graph(b)) for b in bases}
    print(f"bases: {len(bases)} of 5005 six-subsets, {len(classes)} graph classes")

    poset = mt.basis_type_poset()
    tops = [mt.graph_to_json(poset.nodes[i]) for i in poset.maximal()]
    print(f"basis types over all n: {len(poset.nodes)}; maximal under cutting:")
    for g in tops:
        res = mt.static_or_dynamic(mt.make_graph(g))
        print(f"  {g}: {res.verdict.value} ({res.reason})")
