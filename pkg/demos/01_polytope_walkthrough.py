"""Walk through the exterior cyclic polytope of a 4 x 6 positive matrix.

Builds the cone over all wedges of two columns, prints its f-vector, splits
the facets into Schubert and non-Schubert ones, then moves the last
Vandermonde node across 47/5 to watch three simplex facets get swapped for
three others.
"""

from fractions import Fraction

from excyclic.polycone import f_vector
from excyclic.schubert import Kind, classify_facets, exterior_cone, schubert_vertex_counts
from excyclic.zmatrix import vandermonde


def show_polytope(nodes):
    z = vandermonde(nodes, 4)
    cone = exterior_cone(z, 2)
    classes = classify_facets(z, 2, cone)
    non = [c for c in classes if c.kind is Kind.NON_SCHUBERT]
    print(f"nodes {[str(x) for x in nodes]}")
    print(f"  f-vector              {f_vector(cone)}")
    print(f"  Schubert facets       {schubert_vertex_counts(classes)} (vertex count -> how many)")
    print(f"  non-Schubert facets   {len(non)}, sizes {sorted({len(c.vertices) for c in non})}")
    return classes


if __name__ == "__main__":
    for last in (9, Fraction(47, 5), 10):
        classes = show_polytope((1, 3, 4, 7, 8, last))
        big = [c.vertices for c in classes if c.kind is Kind.NON_SCHUBERT and len(c.vertices) > 5]
        if big:
            print(f"  facet with more than five vertices: {big}")
