"""Keep only the Schubert facets of the polytope and compare with the dual of the twisted polytope.

Also prints the first few facet normals as lines W_i ^ W_j of the twist.
"""

from excyclic.polycone import f_vector
from excyclic.schubert import schubert_polytope, twist_duality_check
from excyclic.zmatrix import random_positive, twist

if __name__ == "__main__":
    for n in (5, 6, 7):
        z = random_positive(4, n, 1)
        rep = twist_duality_check(z)
        print(f"n={n}: Schubert polytope equals dual of twisted polytope: {rep.equal}; "
              f"{rep.schubert_facets} facets, vertex identity {rep.vertex_identity}")
        print(f"       f-vector of the Schubert polytope {f_vector(schubert_polytope(z, 2))}")
    w = twist(random_positive(4, 6, 1), 2, 2)
    print("twist of a 4 x 6 matrix, first column:", [str(x) for x in w.column(1)])
