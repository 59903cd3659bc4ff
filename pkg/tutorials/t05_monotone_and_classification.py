"""
Monotone polytopes and the classification table
===============================================

Study the dual side: corner frames, deep smoothness and first
displacements. Then classify the packaged corpora and check the expected
implications between the flags.
"""

from usfp import bundled_corpus, check_inclusions, classify_corpus
from usfp.monotone import (
    corner_frame,
    deeply_smooth_via_displacements,
    first_displacement,
    is_deeply_smooth,
    is_ut_free,
)
from usfp.polytope import LatticePolytope

Q = LatticePolytope([(-1, -1), (2, -1), (-1, 2)])

# At each vertex the primitive edge vectors form a lattice basis.
print("frame at (2, -1):", corner_frame(Q, (2, -1)).edges)

# Deep smoothness asks for the unit parallelepiped at every corner to fit.
print("deeply smooth:", is_deeply_smooth(Q), "UT-free:", is_ut_free(Q))

# The first displacement of a face pushes its facets one lattice step inwards.
facet = next(f for f in Q.faces() if f.dim == 1)
rep = first_displacement(Q, facet)
print("slice vertices:", rep.vertices, "normal fan matches:", rep.normal_match)
print("same verdict via displacements:", deeply_smooth_via_displacements(Q))

# Classify the corpora of dimensions 2, 3 and 4 (a few seconds).
entries = bundled_corpus(2) + bundled_corpus(3) + bundled_corpus(4)
result = classify_corpus(entries, jobs=2)
print(result.table())

# The proven implications hold everywhere. Two 4-dimensional polytopes have a
# UT-free dual without being unimodular, so the conjectured inclusion fails on
# this data.
print(check_inclusions(result.records).render())
