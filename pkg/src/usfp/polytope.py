"""
Lattice polytopes given by their vertices.

Conventions:

* a facet is stored as ``<u, x> <= b`` with ``u`` the primitive outer normal;
* the dual of a reflexive polytope is ``P* = {x : <x, y> >= -1 for y in P}``,
  so the dual vertex of the facet ``<u, x> <= 1`` is ``-u`` and the facet of
  ``P*`` belonging to the vertex ``v`` of ``P`` is ``<x, v> = -1``. The dual
  built by :func:`dual_polytope` lists its facets in the order of the vertices
  of ``P``;
* lower-dimensional polytopes (projections, slices) work in their affine
  lattice: :meth:`LatticePolytope.chart` gives a lattice origin and a basis of
  the saturated direction lattice, and :meth:`LatticePolytope.local` the
  full-dimensional polytope in those coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .linalg import (
    DimensionError,
    IntMatrix,
    IntVector,
    as_matrix,
    det,
    dot,
    identity,
    inverse_unimodular,
    matmul,
    primitive_part,
    rank,
    solve_exact,
)


@dataclass(frozen=True)
class Facet:
    """The facet ``<normal, x> <= level`` and the vertices where it is tight."""

    vertex_indices: FrozenSet[int]
    normal: IntVector
    level: int


@dataclass(frozen=True)
class FaceRef:
    """A nonempty proper face: closed vertex set and the facets containing it."""

    vertex_indices: FrozenSet[int]
    facet_indices: FrozenSet[int]
    dim: int


def _cross(rows: Sequence[Sequence[int]]) -> IntVector:
    """Integer normal of the span of ``n - 1`` vectors in dimension ``n``."""
    n = len(rows[0])
    out = []
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def _nullspace(rows: Sequence[Sequence[int]], n: int) -> List[IntVector]:
    """Integer vectors spanning the rational kernel of ``rows`` (``x`` with ``rows x = 0``)."""
    from fractions import Fraction

    A = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -A[i][fc]
        den = 1
        for x in vec:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append(primitive_part([int(x * den) for x in vec]))
    return basis


def _integer_kernel(C: Sequence[Sequence[int]], n: int) -> List[IntVector]:
    """Basis of ``{x in Z^n : C x = 0}`` by unimodular column reduction."""
    A = [list(r) for r in C]
    U = [list(r) for r in identity(n)]  # columns of U track the operations

    def col_op(j, k, q):  # col_j -= q * col_k
        for row in A:
            row[j] -= q * row[k]
        for row in U:
            row[j] -= q * row[k]

    def col_swap(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in U:
            row[j], row[k] = row[k], row[j]

    pivot_col = 0
    for row in range(len(A)):
        if pivot_col >= n:
            break
        while True:
            nz = [j for j in range(pivot_col, n) if A[row][j] != 0]
            if not nz:
                break
            k = min(nz, key=lambda j: abs(A[row][j]))
            col_swap(pivot_col, k)
            done = True
            for j in range(pivot_col + 1, n):
                if A[row][j]:
                    col_op(j, pivot_col, A[row][j] // A[row][pivot_col])
                    if A[row][j]:
                        done = False
            if done:
                pivot_col += 1
                break
    return [tuple(U[i][j] for i in range(n)) for j in range(pivot_col, n)]


class LatticePolytope:
    """Convex hull of a finite set of lattice points, stored by its vertices.

    ``LatticePolytope(vertices)`` expects pairwise distinct extreme points and
    raises ``ValueError`` otherwise; use :meth:`hull` to drop duplicates and
    non-extreme points first.
    """

    def __init__(self, vertices: Iterable[Iterable[int]], *, check: bool = True,
                 _facets: Optional[List[Facet]] = None):
        self.vertices: IntMatrix = as_matrix(vertices)
        self.ambient_dim = len(self.vertices[0])
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be pairwise distinct")
        p0 = self.vertices[0]
        self.dim = rank([tuple(a - b for a, b in zip(v, p0)) for v in self.vertices[1:]]) \
            if len(self.vertices) > 1 else 0
        self._facets = _facets
        self._faces: Optional[List[FaceRef]] = None
        self._local: Optional[Tuple[LatticePolytope, IntVector, IntMatrix]] = None
        if check:
            extreme = _extreme_indices(self)
            if len(extreme) != len(self.vertices):
                raise ValueError("some points are not vertices; use LatticePolytope.hull")

    @classmethod
    def hull(cls, points: Iterable[Iterable[int]]) -> "LatticePolytope":
        """Convex hull of ``points``: duplicates and non-extreme points dropped."""
        pts = list(dict.fromkeys(as_matrix(points)))
        P = cls(pts, check=False)
        keep = _extreme_indices(P)
        if len(keep) == len(pts):
            return P
        return cls([pts[i] for i in keep], check=False)

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, n_vertices={len(self.vertices)})"

    def __len__(self):
        return len(self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def vertex_set(self) -> FrozenSet[IntVector]:
        return frozenset(self.vertices)

    # -- lower-dimensional support -------------------------------------

    def chart(self) -> Tuple[IntVector, IntMatrix]:
        """``(origin, basis)`` with aff-hull lattice points = origin + Z-span(basis)."""
        self.local()
        _, origin, basis = self._local
        return origin, basis

    def local(self) -> "LatticePolytope":
        """This polytope in coordinates of its affine lattice (full-dimensional).

        ``None`` for a single point.
        """
        if self._local is None:
            n = self.ambient_dim
            if self.dim == n:
                self._local = (self, (0,) * n, identity(n))
                return self
            origin = self.vertices[0]
            diffs = [tuple(a - b for a, b in zip(v, origin)) for v in self.vertices]
            if self.dim == 0:
                self._local = (None, origin, ())
                return None
            normals = _nullspace([d for d in diffs if any(d)], n)
            basis = tuple(_integer_kernel(normals, n))
            coords = [_coordinates_in(basis, d) for d in diffs]
            self._local = (LatticePolytope(coords, check=False), origin, basis)
        return self._local[0]

    def to_ambient(self, y: Sequence[int]) -> IntVector:
        """Map local lattice coordinates back to the ambient lattice."""
        origin, basis = self.chart()
        out = list(origin)
        for c, b in zip(y, basis):
            for j in range(len(out)):
                out[j] += c * b[j]
        return tuple(out)

    # -- facets and faces ------------------------------------------------

    def facets(self) -> List[Facet]:
        if self._facets is None:
            if not self.is_full_dimensional:
                raise DimensionError(
                    f"facets need a full-dimensional polytope (dim {self.dim} in "
                    f"R^{self.ambient_dim}); use .local()")
            self._facets = _scan_facets(self.vertices)
        return self._facets

    def faces(self) -> List[FaceRef]:
        if self._faces is None:
            if self.dim == 0:
                self._faces = []
            elif not self.is_full_dimensional:
                loc = self.local()
                self._faces = loc.faces()
            else:
                self._faces = _faces_by_closure(self)
        return self._faces


def _coordinates_in(basis: Sequence[Sequence[int]], d: Sequence[int]) -> IntVector:
    """Integer coordinates of ``d`` in a lattice basis (rows) of a saturated lattice."""
    k = len(basis)
    n = len(d)
    # pick k columns where the basis is nonsingular
    for cols in itertools.combinations(range(n), k):
        A = [[basis[i][c] for i in range(k)] for c in cols]
        sol = solve_exact(A, [d[c] for c in cols])
        if sol is not None:
            out = tuple(int(x) for x in sol)
            if any(x.denominator != 1 for x in sol):
                raise ValueError("point outside the affine lattice")
            return out
    raise ValueError("degenerate basis")


def _scan_facets(V: IntMatrix) -> List[Facet]:
    m, n = len(V), len(V[0])
    found: Dict[Tuple[IntVector, int], Facet] = {}
    masks: List[int] = []
    if n == 1:
        lo, hi = min(v[0] for v in V), max(v[0] for v in V)
        return [Facet(frozenset(i for i, v in enumerate(V) if v[0] == hi), (1,), hi),
                Facet(frozenset(i for i, v in enumerate(V) if v[0] == lo), (-1,), -lo)]
    for combo in itertools.combinations(range(m), n):
        bits = 0
        for i in combo:
            bits |= 1 << i
        if any(bits & mk == bits for mk in masks):
            continue
        p0 = V[combo[0]]
        diffs = [tuple(a - b for a, b in zip(V[i], p0)) for i in combo[1:]]
        u = _cross(diffs)
        if not any(u):
            continue
        u = primitive_part(u)
        b = dot(u, p0)
        vals = [dot(u, v) for v in V]
        if max(vals) == b:
            pass
        elif min(vals) == b:
            u = tuple(-x for x in u)
            b = -b
            vals = [-x for x in vals]
        else:
            continue
        if (u, b) in found:
            continue
        tight = frozenset(i for i, x in enumerate(vals) if x == b)
        found[(u, b)] = Facet(tight, u, b)
        mk = 0
        for i in tight:
            mk |= 1 << i
        masks.append(mk)
    return sorted(found.values(), key=lambda f: (sorted(f.vertex_indices), f.normal))


def _extreme_indices(P: LatticePolytope) -> List[int]:
    if len(P.vertices) == 1:
        return [0]
    loc = P.local()
    facets = _scan_facets(loc.vertices) if loc._facets is None else loc._facets
    n = loc.ambient_dim
    out = []
    for i in range(len(loc.vertices)):
        normals = [f.normal for f in facets if i in f.vertex_indices]
        if normals and rank(normals) == n:
            out.append(i)
    return out


def _faces_by_closure(P: LatticePolytope) -> List[FaceRef]:
    facets = P.facets()
    m = len(P.vertices)
    full = (1 << m) - 1
    fmasks = []
    for f in facets:
        mk = 0
        for i in f.vertex_indices:
            mk |= 1 << i
        fmasks.append(mk)
    closed = set(fmasks)
    frontier = set(fmasks)
    while frontier:
        new = set()
        for a in frontier:
            for b in fmasks:
                c = a & b
                if c and c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    closed.discard(full)
    out = []
    for mk in closed:
        verts = frozenset(i for i in range(m) if mk >> i & 1)
        fset = frozenset(k for k, fm in enumerate(fmasks) if fm & mk == mk)
        pts = [P.vertices[i] for i in sorted(verts)]
        p0 = pts[0]
        d = rank([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]) if len(pts) > 1 else 0
        out.append(FaceRef(verts, fset, d))
    out.sort(key=lambda f: (f.dim, sorted(f.vertex_indices)))
    return out


# -- predicates ----------------------------------------------------------


def facets(P: LatticePolytope) -> List[Facet]:
    return P.facets()


def faces(P: LatticePolytope) -> List[FaceRef]:
    return P.faces()


def is_projective(P: LatticePolytope) -> bool:
    """Full-dimensional with the origin strictly inside."""
    if not P.is_full_dimensional:
        return False
    return all(f.level > 0 for f in P.facets())


@dataclass(frozen=True)
class SmoothFanoReport:
    projective: bool
    fano: bool
    simplicial: bool
    smooth: bool

    def __bool__(self):
        return self.fano and self.smooth


def is_smooth_fano(P: LatticePolytope) -> SmoothFanoReport:
    """Fano, simplicial and smooth flags; truthy iff smooth Fano."""
    from .linalg import is_primitive

    projective = is_projective(P)
    fano = projective and all(is_primitive(v) for v in P.vertices)
    if not P.is_full_dimensional:
        return SmoothFanoReport(False, False, False, False)
    n = P.ambient_dim
    simplicial = all(len(f.vertex_indices) == n for f in P.facets())
    smooth = simplicial and all(
        abs(det([P.vertices[i] for i in sorted(f.vertex_indices)])) == 1 for f in P.facets())
    return SmoothFanoReport(projective, fano, simplicial, smooth)


def is_reflexive(P: LatticePolytope) -> bool:
    if not is_projective(P):
        raise ValueError("reflexivity is only defined here for projective polytopes")
    return all(f.level == 1 for f in P.facets())


def dual_polytope(P: LatticePolytope) -> LatticePolytope:
    """The lattice polytope ``{x : <x, y> >= -1 on P}`` of a reflexive ``P``.

    Vertex ``k`` of the result is ``-u`` for facet ``k`` of ``P``; facet ``i``
    of the result is ``<x, v_i> = -1`` for vertex ``i`` of ``P``.
    """
    if not is_reflexive(P):
        raise ValueError("dual_polytope needs a reflexive polytope")
    pf = P.facets()
    verts = [tuple(-x for x in f.normal) for f in pf]
    seeded = []
    for i, v in enumerate(P.vertices):
        tight = frozenset(k for k, f in enumerate(pf) if i in f.vertex_indices)
        seeded.append(Facet(tight, tuple(-x for x in v), 1))
    return LatticePolytope(verts, check=False, _facets=seeded)


def _contains(P: LatticePolytope, x: Sequence[int]) -> bool:
    return all(dot(f.normal, x) <= f.level for f in P.facets())


def contains(P: LatticePolytope, x: Sequence[int]) -> bool:
    """Exact membership test for a full-dimensional polytope."""
    return _contains(P, x)


def lattice_points(P: LatticePolytope) -> List[IntVector]:
    """All lattice points of ``P`` by a bounding-box scan, sorted."""
    if P.dim == 0:
        return [P.vertices[0]]
    if not P.is_full_dimensional:
        loc = P.local()
        return sorted(P.to_ambient(y) for y in lattice_points(loc))
    n = P.ambient_dim
    lo = [min(v[j] for v in P.vertices) for j in range(n)]
    hi = [max(v[j] for v in P.vertices) for j in range(n)]
    fs = P.facets()
    out = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(dot(f.normal, x) <= f.level for f in fs):
            out.append(tuple(x))
    return out


def symmetric_points(P: LatticePolytope) -> List[IntVector]:
    """``P ∩ (-P) ∩ Z^n``: lattice points x with both x and -x in P."""
    fs = P.facets()
    return [x for x in lattice_points(P)
            if all(-dot(f.normal, x) <= f.level for f in fs)]


def is_unimodular_polytope(P) -> bool:
    """Every maximal (n x n) minor of the vertex matrix is in {-1, 0, 1}."""
    M = P.vertices if isinstance(P, LatticePolytope) else as_matrix(P)
    n = len(M[0])
    return all(det([M[i] for i in rows]) in (-1, 0, 1)
               for rows in itertools.combinations(range(len(M)), n))


def unimodular_equivalent(P: LatticePolytope, Q: LatticePolytope) -> Optional[IntMatrix]:
    """A unimodular ``T`` with ``{v T : v in P} = vertices of Q``, or ``None``.

    Both polytopes must have unimodular simplicial facets (smooth Fano).
    """
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionError("polytopes live in different dimensions")
    if len(P.vertices) != len(Q.vertices) or len(P.facets()) != len(Q.facets()):
        return None
    n = P.ambient_dim
    fp = P.facets()[0]
    if len(fp.vertex_indices) != n:
        raise ValueError("unimodular_equivalent needs simplicial facets")
    BP = [P.vertices[i] for i in sorted(fp.vertex_indices)]
    BPinv = inverse_unimodular(BP)
    target = Q.vertex_set()
    for fq in Q.facets():
        if len(fq.vertex_indices) != n:
            raise ValueError("unimodular_equivalent needs simplicial facets")
        for perm in itertools.permutations(sorted(fq.vertex_indices)):
            BQ = [Q.vertices[i] for i in perm]
            if det(BQ) not in (1, -1):
                break
            T = matmul(BPinv, BQ)
            if set(matmul(P.vertices, T)) == target:
                return T
    return None


def canonical_form(P: LatticePolytope) -> Tuple[IntVector, ...]:
    """Sorted vertex list, lexicographically least over all ordered facet bases.

    Two smooth Fano polytopes are unimodularly equivalent iff their canonical
    forms agree.
    """
    best = None
    for f in P.facets():
        for perm in itertools.permutations(sorted(f.vertex_indices)):
            B = [P.vertices[i] for i in perm]
            key = tuple(sorted(matmul(P.vertices, inverse_unimodular(B))))
            if best is None or key < best:
                best = key
    return best


def project(P: LatticePolytope, keep: Iterable[int]) -> LatticePolytope:
    """Keep the coordinates in ``keep`` (0-based) and take the convex hull."""
    from .linalg import delete_columns

    keep = list(keep)
    if not keep:
        raise ValueError("projection needs a nonempty index set")
    return LatticePolytope.hull(delete_columns(P.vertices, keep))
