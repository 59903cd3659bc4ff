"""
Digraph polytopes and matroids
==============================

Turn a directed graph into a smooth Fano polytope, recover the digraph from
the polytope, and look at matroids that are not graphic.
"""

from usfp import Digraph, LatticePolytope, is_sfpdg, polytope_from_digraph
from usfp.matroid import LinearMatroid, has_r10_restriction, is_graphic_matroid
from usfp.tumatrix import fixture, matroid_dual_matrix

# Arrows i -> j give the points e_i - e_j; dropping the last coordinate
# leaves a polytope of dimension (number of vertices - 1) when every arrow
# lies on a directed cycle.
G = Digraph(4, ((1, 2), (2, 3), (3, 4), (4, 1), (1, 3)))
P = polytope_from_digraph(G)
print("vertices:", P.vertices)

# The search finds a digraph for any polytope of this kind, up to
# unimodular equivalence.
print("recovered arrows:", is_sfpdg(P).arrows)

# This 4-dimensional polytope is unimodular but comes from no digraph.
print("digraph for the 4-dim fixture:", is_sfpdg(LatticePolytope(fixture("k33_usfp_4d"))))

# Matroids: the cographic matroid of K5 is not graphic, while its dual is
# the graphic matroid of K5 itself.
print("cographic K5 graphic?", is_graphic_matroid(fixture("K5dual")))
K5 = is_graphic_matroid(matroid_dual_matrix(fixture("K5dual")))
print("K5 realized on", K5.num_vertices, "vertices with", len(K5.edges), "edges")

# R10 has rank 5 and ten elements; its circuits have sizes 4 and 6.
R10 = LinearMatroid(fixture("R10"))
print("rank", R10.rank(), "circuits", len(R10.circuits()))
print("R10 found in itself:", has_r10_restriction(R10))
