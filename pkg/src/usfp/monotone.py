"""
Monotone polytopes: corner frames, deep smoothness and first displacements.

Here ``Q`` is a smooth lattice polytope given by its vertices, typically the
dual of a smooth Fano polytope. Its facets are ``<u, x> <= b`` with primitive
outer normals ``u``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from .linalg import IntVector, det, dot, primitive_part, rank, solve_exact
from .polytope import (
    FaceRef,
    LatticePolytope,
    _coordinates_in,
    is_reflexive,
    lattice_points,
    symmetric_points,
)


@dataclass(frozen=True)
class CornerFrame:
    """Primitive edge directions at a vertex, ordered by the far endpoint's index."""

    vertex: IntVector
    edges: Tuple[IntVector, ...]


@dataclass(frozen=True)
class DisplacementReport:
    """The slice of ``Q`` obtained by pushing the facets through a face inwards by one.

    Attributes:
        face: the face that was displaced.
        slice: the slice as a lattice polytope, or None when it has a
            non-integral vertex.
        vertices: the slice vertices as exact rationals.
        is_lattice: all slice vertices are integral.
        is_reflexive: the slice, recentred at its only relative-interior
            lattice point, is reflexive in its affine lattice.
        normal_match: the slice and the face have the same normal fan,
            compared in one lattice chart of their common direction space.
    """

    face: FaceRef
    slice: Optional[LatticePolytope]
    vertices: Tuple[Tuple[Fraction, ...], ...]
    is_lattice: bool
    is_reflexive: bool
    normal_match: bool


def _vertex_index(Q: LatticePolytope, v: Union[int, Sequence[int]]) -> int:
    if isinstance(v, int):
        return v
    try:
        return Q.vertices.index(tuple(v))
    except ValueError:
        raise ValueError(f"{tuple(v)} is not a vertex") from None


def corner_frame(Q: LatticePolytope, v: Union[int, Sequence[int]]) -> CornerFrame:
    """Primitive edge vectors pointing away from vertex ``v``.

    Raises:
        ValueError: ``v`` is not a simple vertex or its edge vectors do not
            form a lattice basis.
    """
    i = _vertex_index(Q, v)
    vert = Q.vertices[i]
    others = sorted(next(iter(f.vertex_indices - {i}))
                    for f in Q.faces() if f.dim == 1 and i in f.vertex_indices)
    if len(others) != Q.dim:
        raise ValueError(f"vertex {vert} has {len(others)} edges in dimension {Q.dim}")
    edges = tuple(primitive_part([a - b for a, b in zip(Q.vertices[j], vert)]) for j in others)
    if det(edges) not in (1, -1):
        raise ValueError(f"edge vectors at {vert} are not a lattice basis")
    return CornerFrame(vert, edges)


def _inside(Q: LatticePolytope, x) -> bool:
    return all(dot(f.normal, x) <= f.level for f in Q.facets())


def is_deeply_smooth(Q: LatticePolytope) -> bool:
    """Does ``Q`` contain the parallelepiped spanned by the edge frame at every vertex?

    By convexity it suffices to test the ``2^n`` corners of each one.
    """
    for i in range(len(Q.vertices)):
        fr = corner_frame(Q, i)
        for T in itertools.product((0, 1), repeat=len(fr.edges)):
            pt = list(fr.vertex)
            for t, e in zip(T, fr.edges):
                if t:
                    for j in range(len(pt)):
                        pt[j] += e[j]
            if not _inside(Q, pt):
                return False
    return True


def _triangles(Q: LatticePolytope):
    """Vertex triples of the triangular 2-faces, in local lattice coordinates."""
    if Q.dim < 2:
        return
    L = Q.local()
    two_faces = [f.vertex_indices for f in L.faces() if f.dim == 2]
    if L.dim == 2:
        two_faces.append(frozenset(range(len(L.vertices))))
    for vs in two_faces:
        if len(vs) == 3:
            yield [L.vertices[k] for k in sorted(vs)]


def _edge_vectors(tri):
    a, b, c = tri
    return [tuple(y - x for x, y in zip(p, q)) for p, q in ((a, b), (b, c), (a, c))]


def _gcd_all(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_ut_free(Q: LatticePolytope, *, require_unit_area: bool = False) -> bool:
    """No 2-face of ``Q`` is a triangle whose three edges are primitive.

    With ``require_unit_area`` a triangle only counts when it also has
    normalized area 1 in its plane's lattice, which is the stricter common
    meaning of a unimodular triangle. Works on lower-dimensional polytopes
    in their own affine lattice; a polygon counts as its own 2-face.
    """
    for tri in _triangles(Q):
        e1, e2, e3 = _edge_vectors(tri)
        if require_unit_area:
            minors = [e1[i] * e3[j] - e1[j] * e3[i]
                      for i, j in itertools.combinations(range(len(e1)), 2)]
            if _gcd_all(minors) == 1:
                return False
        elif all(_gcd_all(e) == 1 for e in (e1, e2, e3)):
            return False
    return True


def _slice_vertices(Q: LatticePolytope, S: FrozenSet[int]):
    facets = Q.facets()
    n = Q.ambient_dim
    eq = [(facets[i].normal, facets[i].level - 1) for i in sorted(S)]
    rest = [j for j in range(len(facets)) if j not in S]
    k = rank([u for u, _ in eq])
    found = {}
    for extra in itertools.combinations(rest, n - k):
        rows = eq + [(facets[j].normal, facets[j].level) for j in extra]
        A = [u for u, _ in rows]
        # drop dependent equalities so the system is square
        basis = []
        for r in range(len(A)):
            if rank([A[t] for t in basis + [r]]) == len(basis) + 1:
                basis.append(r)
        if len(basis) != n:
            continue
        x = solve_exact([A[t] for t in basis], [rows[t][1] for t in basis])
        if all(dot(u, x) == b for u, b in rows) and _inside(Q, x):
            found[x] = None
    return list(found)


def _normal_fan(P: LatticePolytope) -> FrozenSet[FrozenSet[IntVector]]:
    """Maximal cones of the normal fan, each given by its primitive facet normals."""
    return frozenset(frozenset(f.normal for f in P.facets() if i in f.vertex_indices)
                     for i in range(len(P.vertices)))


def _normally_equivalent(face_pts, slice_pts) -> bool:
    """Same normal fan for two polytopes lying in parallel affine subspaces.

    The slice may have rational vertices; it is dilated to integral ones,
    which leaves its normal fan unchanged.
    """
    A = LatticePolytope.hull(face_pts)
    scale = lcm(*(x.denominator for p in slice_pts for x in p))
    B = LatticePolytope.hull([[int(x * scale) for x in p] for p in slice_pts])
    if A.dim != B.dim:
        return False
    if A.dim == 0:
        return True
    _, basis = A.chart()
    diffs = [tuple(a - b for a, b in zip(v, B.vertices[0])) for v in B.vertices]
    if rank(list(basis) + diffs) != len(basis):
        return False
    # integer differences inside the span lie in the chart's saturated lattice
    local_b = LatticePolytope.hull([_coordinates_in(basis, d) for d in diffs])
    return _normal_fan(A.local()) == _normal_fan(local_b)


def _reflexive_recentred(F0: LatticePolytope) -> bool:
    if F0.dim == 0:
        return True
    L = F0.local()
    interior = [p for p in lattice_points(L)
                if all(dot(f.normal, p) < f.level for f in L.facets())]
    if len(interior) != 1:
        return False
    c = interior[0]
    shifted = LatticePolytope([tuple(a - b for a, b in zip(v, c)) for v in L.vertices],
                              check=False)
    return is_reflexive(shifted)


def first_displacement(Q: LatticePolytope, face: FaceRef) -> DisplacementReport:
    """Slice ``Q`` with every facet through ``face`` moved inwards by one lattice step.

    Raises:
        ValueError: the slice is empty.
    """
    S = face.facet_indices
    pts = _slice_vertices(Q, S)
    if not pts:
        raise ValueError("first displacement is empty")
    is_lattice = all(x.denominator == 1 for p in pts for x in p)
    F0 = None
    reflexive = False
    if is_lattice:
        F0 = LatticePolytope.hull([[int(x) for x in p] for p in pts])
        reflexive = _reflexive_recentred(F0)
    face_pts = [Q.vertices[i] for i in face.vertex_indices]
    match = _normally_equivalent(face_pts, pts)
    return DisplacementReport(face, F0, tuple(pts), is_lattice, reflexive, match)


def deeply_smooth_via_displacements(Q: LatticePolytope) -> bool:
    """``Q`` and the first displacement of each of its proper faces are UT-free.

    An empty or non-lattice displacement counts as a failure: a deeply
    smooth polytope contains ``v + sum(frame)`` at every vertex, which is the
    displacement of that vertex.
    """
    if not is_ut_free(Q):
        return False
    for f in Q.faces():
        try:
            rep = first_displacement(Q, f)
        except ValueError:
            return False
        if not rep.is_lattice or not is_ut_free(rep.slice):
            return False
    return True


def vertex_is_negated_frame_sum(Q: LatticePolytope, v: Union[int, Sequence[int]]) -> bool:
    """Is ``v`` equal to minus the sum of its primitive edge vectors?"""
    fr = corner_frame(Q, v)
    return all(x == -sum(e[j] for e in fr.edges) for j, x in enumerate(fr.vertex))


@dataclass(frozen=True)
class EdgePairCheck:
    """Membership of ``u1``, ``u2``, ``u1 + u2`` and ``u1 - u2`` in the symmetric points."""

    vertex: int
    u1: IntVector
    u2: IntVector
    u1_in: bool
    u2_in: bool
    sum_in: bool
    diff_in: bool

    @property
    def ok(self) -> bool:
        return self.u1_in and self.u2_in and (self.sum_in or self.diff_in)


def edge_pair_witnesses(Q: LatticePolytope) -> List[EdgePairCheck]:
    """For every vertex and every pair of its edge vectors, which combinations lie in E(Q)."""
    E = set(symmetric_points(Q))
    out = []
    for i in range(len(Q.vertices)):
        fr = corner_frame(Q, i)
        for a, b in itertools.combinations(fr.edges, 2):
            s = tuple(x + y for x, y in zip(a, b))
            d = tuple(x - y for x, y in zip(a, b))
            out.append(EdgePairCheck(i, a, b, a in E, b in E, s in E, d in E))
    return out
