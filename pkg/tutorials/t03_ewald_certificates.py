"""
Ewald conditions with certificates
==================================

Check the weak, strong and star Ewald conditions by scanning the symmetric
points, then build the same certificates directly from a unimodular
polytope.
"""

from usfp import LatticePolytope, dual_polytope
from usfp.ewald import (
    find_star_ewald_point,
    star_ewald,
    strong_ewald,
    strong_ewald_transform,
    transform_witness,
    weak_ewald,
)
from usfp.linalg import matmul
from usfp.tumatrix import fixture

P = LatticePolytope([(1, 0), (0, 1), (-1, -1)])

# Weak: some lattice basis lies among the symmetric points of the dual.
print("weak witness:", weak_ewald(P).points)

# Strong: one basis on every facet of the dual. Witness i sits on the facet
# dual to vertex i of P.
for w in strong_ewald(P).witnesses:
    print("facet dual to", P.vertices[w.face], "basis", w.points)

# A unimodular change of coordinates that sends one vertex to (1, 1) and
# keeps every vertex inside the square [-1, 1]^2.
T = strong_ewald_transform(P, (1, 0))
print("T =", T, "image:", matmul(P.vertices, T))
print("basis read off T:", transform_witness(P, (1, 0), T).points)

# Star: every face of the dual gets a point on exactly one facet through it.
Q = dual_polytope(P)
print("star condition holds:", bool(star_ewald(P)))
for f in Q.faces():
    print("face", sorted(Q.vertices[i] for i in f.vertex_indices),
          "point", find_star_ewald_point(P, f))

# The constructions scale to larger examples, such as this 4-dimensional one.
P4 = LatticePolytope(fixture("k33_usfp_4d"))
images = [matmul(P4.vertices, strong_ewald_transform(P4, v)) for v in range(len(P4.vertices))]
print("4-dim images inside [-1, 1]^4:", all(abs(x) <= 1 for M in images for r in M for x in r))
