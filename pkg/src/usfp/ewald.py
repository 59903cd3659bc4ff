"""
Weak, strong and star Ewald conditions.

Everything is phrased through the symmetric lattice points ``E`` of the dual
polytope ``P* = {x : <x, y> >= -1 for y in P}``. For a vertex ``v`` of ``P``
the dual facet ``F_v`` is ``{x in P* : <x, v> = -1}``, and for ``x`` in ``E``
every pairing ``<x, v>`` lies in ``{-1, 0, 1}``.

Two kinds of checkers live here: definitional scans over ``E`` that work for
any reflexive smooth Fano polytope, and the two constructions that produce
witnesses directly for unimodular ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence, Tuple, Union

from .linalg import (
    IntMatrix,
    IntVector,
    det,
    dot,
    inverse_unimodular,
    matmul,
    transpose,
)
from .polytope import FaceRef, LatticePolytope, dual_polytope, symmetric_points
from .tumatrix import row_split


@dataclass(frozen=True)
class EwaldWitness:
    """Certificate for one Ewald condition.

    Attributes:
        kind: ``"weak"``, ``"strong"`` or ``"star"``.
        points: the basis (weak, strong) or the single point lambda (star).
        face: index of the dual facet (strong) or dual face (star); None for weak.
        transform: unimodular matrix when the witness was built from one.
    """

    kind: str
    points: Tuple[IntVector, ...]
    face: Optional[int] = None
    transform: Optional[IntMatrix] = None


@dataclass(frozen=True)
class EwaldReport:
    """Outcome of a per-facet or per-face check; falsy on failure."""

    ok: bool
    witnesses: Tuple[EwaldWitness, ...]
    failure: Optional[int] = None

    def __bool__(self):
        return self.ok


def _scan_order(points):
    # short vectors first, then a fixed lexicographic tie-break
    return sorted(points, key=lambda p: (sum(map(abs, p)), tuple(p)))


def _minor_gcd(rows, n):
    k = len(rows)
    g = 0
    for cols in itertools.combinations(range(n), k):
        g = gcd(g, det([[r[c] for c in cols] for r in rows]))
        if g == 1:
            return 1
    return g


def _unimodular_basis(points, n) -> Optional[Tuple[IntVector, ...]]:
    """``n`` of ``points`` with determinant +-1, or None.

    A partial choice is kept only while the gcd of its maximal minors is 1,
    which is exactly when it extends to a lattice basis.
    """
    pts = [p for p in points if any(p)]

    def extend(start, chosen):
        if len(chosen) == n:
            return tuple(chosen)
        for i in range(start, len(pts) - (n - len(chosen)) + 1):
            cand = chosen + [pts[i]]
            if _minor_gcd(cand, n) == 1:
                found = extend(i + 1, cand)
                if found:
                    return found
        return None

    return extend(0, [])


def _vertex(P: LatticePolytope, v: Union[int, Sequence[int]]) -> int:
    if isinstance(v, int):
        if not 0 <= v < len(P.vertices):
            raise IndexError("vertex index out of range")
        return v
    try:
        return P.vertices.index(tuple(v))
    except ValueError:
        raise ValueError(f"{tuple(v)} is not a vertex") from None


def weak_ewald(P: LatticePolytope) -> Optional[EwaldWitness]:
    """A lattice basis inside the symmetric points of the dual, or None."""
    n = P.ambient_dim
    E = symmetric_points(dual_polytope(P))
    # a basis stays a basis under sign changes, so keep one of each pair +-x
    half = [p for p in E if any(p) and next(x for x in p if x) > 0]
    basis = _unimodular_basis(_scan_order(half), n)
    return EwaldWitness("weak", basis) if basis else None


def strong_ewald(P: LatticePolytope) -> EwaldReport:
    """For each dual facet ``F_v`` a lattice basis in ``E`` lying on ``F_v``.

    Witness ``i`` belongs to the facet dual to vertex ``i`` of ``P``. Stops at
    the first facet without a basis.
    """
    n = P.ambient_dim
    E = _scan_order(symmetric_points(dual_polytope(P)))
    out = []
    for i, v in enumerate(P.vertices):
        basis = _unimodular_basis([x for x in E if dot(x, v) == -1], n)
        if basis is None:
            return EwaldReport(False, tuple(out), i)
        out.append(EwaldWitness("strong", basis, i))
    return EwaldReport(True, tuple(out))


def is_star_witness(P: LatticePolytope, facet_set, lam: Sequence[int]) -> bool:
    """Star condition for the dual face cut out by the facets dual to ``facet_set``.

    Requires ``lam`` and ``-lam`` in the dual, exactly one facet through the
    face containing ``lam`` and none containing ``-lam``.
    """
    pair = [dot(lam, v) for v in P.vertices]
    if any(abs(x) > 1 for x in pair):
        return False
    on = [pair[i] for i in facet_set]
    return on.count(-1) == 1 and on.count(1) == 0


def star_ewald(P: LatticePolytope) -> EwaldReport:
    """Star condition for every proper face of the dual, by scanning ``E``.

    Witness ``k`` belongs to ``dual_polytope(P).faces()[k]``; the report
    stops at the first face without a witness.
    """
    Q = dual_polytope(P)
    E = _scan_order(symmetric_points(Q))
    out = []
    for k, f in enumerate(Q.faces()):
        lam = next((x for x in E if is_star_witness(P, f.facet_indices, x)), None)
        if lam is None:
            return EwaldReport(False, tuple(out), k)
        out.append(EwaldWitness("star", (lam,), k))
    return EwaldReport(True, tuple(out))


def _facet_through(P: LatticePolytope, idx) -> Tuple[int, ...]:
    idx = set(idx)
    for f in P.facets():
        if idx <= f.vertex_indices:
            return tuple(sorted(f.vertex_indices))
    raise ValueError(f"vertices {sorted(idx)} lie on no common facet")


def strong_ewald_transform(P: LatticePolytope, v: Union[int, Sequence[int]]) -> IntMatrix:
    """Unimodular ``T`` with ``V T`` in ``{-1,0,1}`` and ``v T = (1, ..., 1)``.

    ``V`` is the vertex matrix of the unimodular smooth Fano polytope ``P``.
    Start from the standard form for a facet through ``v`` with ``v`` sent to
    ``e_1``. Each later column ``c_j`` whose first-row entry is 0 becomes
    ``c_j - c_1`` when that stays in ``{-1,0,1}`` and ``c_j + c_1``
    otherwise; finally columns whose first-row entry is -1 are negated.

    Raises:
        ValueError: both candidates leave ``{-1,0,1}``, so ``P`` is not unimodular.
    """
    i = _vertex(P, v)
    n = P.ambient_dim
    rest = [k for k in _facet_through(P, [i]) if k != i]
    T = [list(r) for r in inverse_unimodular([P.vertices[k] for k in [i] + rest])]
    M = [list(r) for r in matmul(P.vertices, T)]

    def add_col(j, s):  # c_j += s * c_1, on both M and T
        for A in (M, T):
            for r in A:
                r[j] += s * r[0]

    for j in range(1, n):
        if M[i][j] != 0:
            continue
        if all(abs(r[j] - r[0]) <= 1 for r in M):
            add_col(j, -1)
        elif all(abs(r[j] + r[0]) <= 1 for r in M):
            add_col(j, 1)
        else:
            raise ValueError("column update leaves {-1,0,1}; polytope is not unimodular")
    for j in range(n):
        if M[i][j] == -1:
            for A in (M, T):
                for r in A:
                    r[j] = -r[j]
    if any(abs(x) > 1 for r in M for x in r):
        raise ValueError("transformed vertices leave [-1,1]^n; polytope is not unimodular")
    return tuple(tuple(r) for r in T)


def transform_witness(P: LatticePolytope, v, T: IntMatrix) -> EwaldWitness:
    """Strong Ewald witness on the dual facet of ``v`` read off from ``T``.

    With ``v T = (1, ..., 1)`` and ``V T`` in ``{-1,0,1}``, the negated
    columns of ``T`` lie in ``E`` and on that facet, and form a basis.
    """
    i = _vertex(P, v)
    return EwaldWitness("strong", tuple(tuple(-x for x in c) for c in transpose(T)), i, T)


def find_star_ewald_point(P: LatticePolytope, face: Union[FaceRef, Sequence[int]]) -> IntVector:
    """Star Ewald point for a dual face, built from a row split.

    ``face`` is a face of ``dual_polytope(P)`` or directly the indices of the
    vertices of ``P`` whose dual facets cut it out. Let ``u_1 .. u_d`` be
    those vertices (smallest index first) and complete them to the vertex
    basis ``N`` of a facet of ``P``. Split the columns ``1, d+1 .. n`` of
    ``V N^-1`` with signs ``a``; with ``s_i = a_i`` if ``a_1 = -1`` and
    ``s_i = -a_i`` otherwise, ``lambda = N^-1 (-1, 0 .. 0, s_{d+1} .. s_n)``.

    Raises:
        ValueError: no row split exists (``P`` is not unimodular) or the
            result fails the star condition.
    """
    S = sorted(face.facet_indices if isinstance(face, FaceRef) else face)
    if not S:
        raise ValueError("empty facet set")
    n = P.ambient_dim
    d = len(S)
    rest = [k for k in _facet_through(P, S) if k not in S]
    N = [P.vertices[k] for k in S + rest]
    Ninv = inverse_unimodular(N)
    cols = transpose(matmul(P.vertices, Ninv))
    split = row_split(cols, [0] + list(range(d, n)))
    a = {j: (1 if j in split.plus else -1) for j in [0] + list(range(d, n))}
    flip = 1 if a[0] == -1 else -1
    rhs = [-1] + [0] * (d - 1) + [flip * a[j] for j in range(d, n)]
    lam = tuple(sum(Ninv[r][c] * rhs[c] for c in range(n)) for r in range(n))
    if not is_star_witness(P, S, lam):
        raise ValueError("constructed point fails the star condition; polytope is not unimodular")
    return lam
