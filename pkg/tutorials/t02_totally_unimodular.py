"""
Standard forms and totally unimodular matrices
==============================================

Rewrite a vertex matrix in the basis of one facet, test total unimodularity
with two independent methods and split rows into a signed {-1, 0, 1} sum.
"""

from usfp import bundled_corpus, is_unimodular_polytope
from usfp.tumatrix import (
    fixture,
    ghouila_houri_is_tu,
    is_totally_unimodular,
    row_split,
    standard_form,
)

# Take a unimodular three-dimensional polytope from the packaged corpus. In
# the standard form for facet 0, that facet's vertices become the unit rows.
P = next(e.polytope() for e in bundled_corpus(3)
         if len(e.vertices) == 6 and is_unimodular_polytope(e.polytope()))
M = standard_form(P, 0)
for row in M:
    print(row)

# For a unimodular smooth Fano polytope the standard form is totally
# unimodular. The Laplace-expansion check and the Ghouila-Houri check agree.
print("TU (minors):", bool(is_totally_unimodular(M)))
print("TU (Ghouila-Houri):", ghouila_houri_is_tu(M))

# Two of the corpus polytopes are not unimodular, and their standard forms
# fail the test.
Pbad = next(e.polytope() for e in bundled_corpus(3) if not is_unimodular_polytope(e.polytope()))
print("non-unimodular standard form TU:", bool(is_totally_unimodular(standard_form(Pbad, 0))))

# A failing check reports the offending square submatrix.
rep = is_totally_unimodular([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
print("odd cycle:", rep)

# Rows of a TU matrix can be signed so that their sum stays in {-1, 0, 1}.
split = row_split(fixture("split_demo"), range(6))
print("plus rows", split.plus, "minus rows", split.minus, "sum", split.combined)
