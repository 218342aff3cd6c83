"""Exact computations with exterior cyclic polytopes, their matroids and the
k = m = 2 amplituhedron.

Submodules:

* ``rational``: exact matrices, Bareiss determinants and rank, polynomials.
* ``zmatrix``: positive matrices, Vandermonde and seeded random generators, twists.
* ``twistor``: exterior algebra, wedges, brackets, Hodge star and meets.
* ``polycone``: pointed cones by double description, face lattices, duals.
* ``matroid``: wedge-power matroids, graph bases and circuits, cut and glue.
* ``schubert``: facet classification and the twisted dual polytope.
* ``amplituhedron``: membership oracles, separation certificates, sampling.
* ``experiments`` and ``cli``: the experiment registry and command line.
"""

from .rational import RatMatrix
from .zmatrix import PositiveMatrix, random_positive, twist, vandermonde

__version__ = "0.1.0"

__all__ = ["RatMatrix", "PositiveMatrix", "random_positive", "twist", "vandermonde", "__version__"]
