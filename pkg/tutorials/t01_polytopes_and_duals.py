"""
Smooth Fano polytopes and their duals
=====================================

Build a small smooth Fano polygon, look at its facets, pass to the dual
polytope and collect its symmetric lattice points.
"""

from usfp import LatticePolytope, dual_polytope, is_smooth_fano, is_unimodular_polytope
from usfp.polytope import lattice_points, symmetric_points

# The triangle with vertices e1, e2 and -e1-e2 is the simplest smooth Fano
# polygon. Each facet is written as <normal, x> <= level.
P = LatticePolytope([(1, 0), (0, 1), (-1, -1)])
for f in P.facets():
    print("facet", f.normal, "<=", f.level, "through vertices", sorted(f.vertex_indices))

# The report explains each part of the smooth Fano test.
print(is_smooth_fano(P))

# Every maximal minor of the vertex matrix is -1, 0 or 1.
print("unimodular:", is_unimodular_polytope(P))

# The dual is {x : <x, y> >= -1 for all y in P}. For a reflexive P it is again
# a lattice polytope; here it is a triangle with 10 lattice points.
Q = dual_polytope(P)
print("dual vertices:", Q.vertices)
print("lattice points of the dual:", len(lattice_points(Q)))

# The symmetric points E(Q) are the lattice points x with -x also in Q.
print("symmetric points:", sorted(symmetric_points(Q)))
