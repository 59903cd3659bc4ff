import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CROSS, SQUARE, TRIANGLE, TRIANGLE_DUAL, corpus
from usfp.linalg import DimensionError, dot, matmul, rank
from usfp.polytope import (
    LatticePolytope,
    canonical_form,
    dual_polytope,
    is_projective,
    is_reflexive,
    is_smooth_fano,
    is_unimodular_polytope,
    lattice_points,
    project,
    symmetric_points,
    unimodular_equivalent,
)
from usfp.tumatrix import fixture


def facet_table(P):
    return sorted((f.normal, f.level) for f in P.facets())


def test_triangle_facets(triangle):
    assert facet_table(triangle) == [((-2, 1), 1), ((1, -2), 1), ((1, 1), 1)]


def test_square_and_cross_facets(square, cross):
    assert facet_table(square) == [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]
    assert len(cross.facets()) == 4


def test_facets_need_full_dimension():
    with pytest.raises(DimensionError):
        LatticePolytope([(0, 0), (3, 0)]).facets()


def test_constructor_rejects_non_vertices():
    with pytest.raises(ValueError):
        LatticePolytope([(1, 0), (0, 1), (-1, -1), (0, 0)])
    assert len(LatticePolytope.hull([(1, 0), (0, 1), (-1, -1), (0, 0), (1, 0)])) == 3


def test_projectivity(triangle):
    assert is_projective(triangle)
    assert not is_projective(LatticePolytope.hull(fixture("R10")))
    assert not is_projective(LatticePolytope([(1, 0), (0, 1), (1, 1)]))


def test_smooth_fano_flags(triangle):
    assert is_smooth_fano(triangle)
    rep = is_smooth_fano(LatticePolytope([(1, 0), (0, 1), (-1, -2)]))
    assert rep.fano and rep.simplicial and not rep.smooth and not rep
    assert is_smooth_fano(LatticePolytope(fixture("k33_usfp_4d")))


def test_reflexive(triangle, square):
    assert is_reflexive(triangle)
    assert is_reflexive(square)
    assert not is_reflexive(LatticePolytope([(2, 0), (0, 2), (-2, -2)]))
    with pytest.raises(ValueError):
        is_reflexive(LatticePolytope([(1, 0), (0, 1), (1, 1)]))


def test_dual(triangle, cross):
    assert dual_polytope(triangle).vertex_set() == set(TRIANGLE_DUAL)
    assert dual_polytope(cross).vertex_set() == set(SQUARE)
    with pytest.raises(ValueError):
        dual_polytope(LatticePolytope([(2, 0), (0, 2), (-2, -2)]))


def test_dual_inequalities_hold(triangle):
    Q = dual_polytope(triangle)
    assert all(dot(x, y) >= -1 for x in Q.vertices for y in triangle.vertices)


def test_dual_facets_match_fresh_scan():
    # the dual comes with facets filled in from duality; recompute from scratch
    for _, P, Q in corpus(3):
        fresh = LatticePolytope(Q.vertices)
        assert facet_table(fresh) == facet_table(Q)


def test_dual_round_trip_dim2():
    for _, P, Q in corpus(2):
        assert dual_polytope(Q).vertex_set() == P.vertex_set()


def test_faces(triangle, square):
    assert len(triangle.faces()) == 6
    assert len(square.faces()) == 8


def test_euler_relation_dim3_duals():
    for _, _, Q in corpus(3):
        counts = [sum(f.dim == k for f in Q.faces()) for k in range(3)]
        assert counts[0] - counts[1] + counts[2] == 2


def test_face_invariants():
    for _, P, Q in corpus(3):
        for R in (P, Q):
            fs = R.facets()
            for f in R.faces():
                common = set(range(len(R.vertices)))
                for i in f.facet_indices:
                    common &= fs[i].vertex_indices
                assert common == f.vertex_indices
                p0 = R.vertices[min(f.vertex_indices)]
                diffs = [tuple(a - b for a, b in zip(R.vertices[i], p0)) for i in f.vertex_indices]
                assert rank(diffs) == f.dim


def test_simplicial_iff_dual_simple():
    for _, P, Q in corpus(3):
        simple = all(sum(v in f.vertex_indices for f in Q.facets()) == 3 for v in range(len(Q)))
        simplicial = all(len(f.vertex_indices) == 3 for f in P.facets())
        assert simple == simplicial


def test_lattice_points(triangle, square):
    assert len(lattice_points(square)) == 9
    assert sorted(lattice_points(triangle)) == sorted([(0, 0)] + list(TRIANGLE))
    assert lattice_points(LatticePolytope([(0, 0), (3, 0)])) == [(0, 0), (1, 0), (2, 0), (3, 0)]


def test_lattice_points_by_brute_force_box():
    for _, _, Q in corpus(2):
        box = itertools.product(range(-3, 4), repeat=2)
        expected = [x for x in box if all(dot(x, y) >= -1 for y in dual_polytope(Q).vertices)]
        assert sorted(lattice_points(Q)) == sorted(expected)


def test_symmetric_points(square, triangle):
    E = symmetric_points(dual_polytope(triangle))
    assert sorted(E) == sorted([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)])
    assert len(symmetric_points(square)) == 9


def test_symmetric_points_closed_under_negation():
    for _, P, Q in corpus(3):
        for R in (P, Q):
            E = set(symmetric_points(R))
            assert (0,) * R.ambient_dim in E
            assert E == {tuple(-x for x in p) for p in E}


def test_is_unimodular_polytope():
    assert is_unimodular_polytope(CROSS)
    assert not is_unimodular_polytope([(1, 1), (1, -1)])
    assert is_unimodular_polytope(fixture("k33_usfp_4d"))
    # the same matrix with the third row read as (1, 1, -1, 0) is not unimodular
    variant = list(fixture("k33_usfp_4d"))
    variant[2] = (1, 1, -1, 0)
    assert not is_unimodular_polytope(variant)
    assert not is_smooth_fano(LatticePolytope.hull(variant))


def test_unimodular_equivalent(triangle, cross):
    swapped = LatticePolytope([(b, a) for a, b in TRIANGLE])
    T = unimodular_equivalent(triangle, swapped)
    assert T is not None and set(matmul(triangle.vertices, T)) == swapped.vertex_set()
    assert unimodular_equivalent(triangle, cross) is None
    shear = ((1, 1), (0, 1))
    image = LatticePolytope(matmul(TRIANGLE, shear))
    T = unimodular_equivalent(triangle, image)
    assert set(matmul(triangle.vertices, T)) == image.vertex_set()


def test_unimodular_equivalent_dimension_mismatch(triangle):
    with pytest.raises(DimensionError):
        unimodular_equivalent(triangle, corpus(3)[0][1])


def test_corpus_classes_pairwise_inequivalent():
    for d in (2, 3):
        forms = [canonical_form(P) for _, P, _ in corpus(d)]
        assert len(set(forms)) == len(forms)


@given(st.integers(0, 17), st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_canonical_form_invariant_under_unimodular_maps(k, entries):
    from usfp.linalg import det
    T = [entries[0:3], entries[3:6], entries[6:9]]
    if abs(det(T)) != 1:
        T = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    _, P, _ = corpus(3)[k]
    Q = LatticePolytope(matmul(P.vertices, T))
    assert canonical_form(Q) == canonical_form(P)
    assert unimodular_equivalent(P, Q) is not None


def test_project(square):
    seg = project(square, [0])
    assert seg.vertex_set() == {(1,), (-1,)}
    with pytest.raises(ValueError):
        project(square, [])
    assert not is_projective(project(LatticePolytope.hull(fixture("R10")), range(5)))


def test_projection_preserves_projectivity():
    for d in (2, 3):
        for _, P, _ in corpus(d):
            for k in range(1, d + 1):
                for keep in itertools.combinations(range(d), k):
                    assert is_projective(project(P, keep))


def test_lower_dimensional_chart():
    seg = LatticePolytope([(0, 0, 0), (2, 2, 0)])
    assert seg.dim == 1
    assert lattice_points(seg) == [(0, 0, 0), (1, 1, 0), (2, 2, 0)]
    tri = LatticePolytope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert tri.dim == 2 and len(tri.faces()) == 6
