"""
Row matroids of integer matrices.

The ground set of a :class:`LinearMatroid` is the set of row indices of its
source matrix; a set of rows is independent when the rows are linearly
independent over the rationals. On top of the rank oracle this module finds
graph realizations, detects R10 restrictions and recognizes smooth Fano
polytopes that come from directed graphs.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .linalg import DimensionError, IntMatrix, as_matrix, det, rank, solve_exact
from .polytope import LatticePolytope, is_unimodular_polytope, unimodular_equivalent


class SearchLimitError(RuntimeError):
    """Raised when an exhaustive search exceeds its configured bound or deadline."""


class LinearMatroid:
    """Matroid on the rows of an integer matrix.

    Args:
        source: the representing matrix, one row per ground element.
        bound: largest ground set accepted by the exhaustive searches.
    """

    def __init__(self, source: Sequence[Sequence[int]], bound: int = 16):
        self.source: IntMatrix = as_matrix(source)
        self.bound = bound
        self._rank_cache: Dict[FrozenSet[int], int] = {}

    def __len__(self):
        return len(self.source)

    @property
    def ground_set(self) -> range:
        return range(len(self.source))

    def rank_of(self, S=None) -> int:
        """Rank of the rows in ``S`` (all rows when ``S`` is None)."""
        S = frozenset(self.ground_set if S is None else S)
        if any(not 0 <= i < len(self.source) for i in S):
            raise IndexError(f"ground set is 0..{len(self.source) - 1}")
        if S not in self._rank_cache:
            self._rank_cache[S] = rank([self.source[i] for i in sorted(S)]) if S else 0
        return self._rank_cache[S]

    def rank(self) -> int:
        return self.rank_of()

    def is_independent(self, S) -> bool:
        S = frozenset(S)
        return self.rank_of(S) == len(S)

    def _check_bound(self):
        if len(self.source) > self.bound:
            raise SearchLimitError(f"{len(self.source)} elements exceed bound {self.bound}")

    def circuits(self) -> List[FrozenSet[int]]:
        """All minimal dependent sets, smallest first.

        Level-wise search: a set is examined only when all of its one-smaller
        subsets are independent.
        """
        self._check_bound()
        m = len(self.source)
        out = []
        independent = {frozenset()}
        for k in range(1, self.rank() + 2):
            nxt = set()
            for S in itertools.combinations(range(m), k):
                fs = frozenset(S)
                if k > 1 and any(fs - {x} not in independent for x in S):
                    continue
                if self.rank_of(fs) == k:
                    nxt.add(fs)
                else:
                    out.append(fs)
            independent = nxt
            if not independent:
                break
        return out

    def bases(self) -> List[FrozenSet[int]]:
        r = self.rank()
        return [frozenset(S) for S in itertools.combinations(self.ground_set, r)
                if self.rank_of(S) == r]


# -- graphs -----------------------------------------------------------------


@dataclass(frozen=True)
class GraphRealization:
    """A graph whose cycle matroid equals a given matroid.

    ``edges[i]`` is the (unordered) edge assigned to ground element ``i``;
    vertices are ``0 .. num_vertices - 1``. A loop has equal endpoints.
    """

    num_vertices: int
    edges: Tuple[Tuple[int, int], ...]

    def is_acyclic(self, S) -> bool:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in S:
            a, b = (find(x) for x in self.edges[i])
            if a == b:
                return False
            parent[a] = b
        return True

    def incidence_rows(self) -> IntMatrix:
        """Signed incidence rows ``e_tail - e_head`` (zero row for a loop)."""
        rows = []
        for t, h in self.edges:
            r = [0] * self.num_vertices
            if t != h:
                r[t], r[h] = 1, -1
            rows.append(tuple(r))
        return tuple(rows)


def _greedy_basis(M: IntMatrix) -> List[int]:
    basis: List[int] = []
    for i in range(len(M)):
        if rank([M[j] for j in basis + [i]]) == len(basis) + 1:
            basis.append(i)
    return basis


def _basis_coordinates(M: IntMatrix, basis: Sequence[int]) -> List[Tuple[Fraction, ...]]:
    """Coordinates of every row of ``M`` in the rows indexed by ``basis``."""
    B = [M[i] for i in basis]
    r = len(B)
    cols = next(c for c in itertools.combinations(range(len(M[0])), r)
                if det([[row[j] for j in c] for row in B]) != 0)
    Bt = [[B[k][j] for k in range(r)] for j in cols]
    return [solve_exact(Bt, [row[j] for j in cols]) for row in M]


class _TreeSearch:
    """Edge-labelled forests on which prescribed label sets form paths.

    Labels ``0 .. r-1`` are placed in order; each label either joins two
    existing vertices in different components, hangs a new vertex off an
    existing one, or starts a new component with two new vertices. Every
    forest arises once up to renaming vertices. ``paths`` lists label sets
    that must induce a path; partial placements are pruned when some set
    already has a vertex of degree three.
    """

    def __init__(self, r: int, paths: Sequence[FrozenSet[int]], deadline=None):
        self.r = r
        self.paths = [p for p in {frozenset(p) for p in paths} if len(p) > 1]
        self.by_label = [[k for k, p in enumerate(self.paths) if i in p] for i in range(r)]
        self.deadline = deadline

    def __iter__(self):
        yield from self._grow(0, [], [])

    def _ok_partial(self, edges, label):
        a, b = edges[label]
        for k in self.by_label[label]:
            deg = Counter()
            for i in self.paths[k]:
                if i < len(edges):
                    deg.update(edges[i])
            if deg[a] > 2 or deg[b] > 2:
                return False
        return True

    def _ok_final(self, edges):
        for p in self.paths:
            deg = Counter()
            for i in p:
                deg.update(edges[i])
            # a connected subforest with max degree 2 is a path
            if max(deg.values()) > 2 or len(deg) != len(p) + 1:
                return False
        return True

    def _grow(self, i, edges, comp):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchLimitError("deadline exceeded")
        if i == self.r:
            if self._ok_final(edges):
                yield len(comp), tuple(edges)
            return
        nv = len(comp)
        options = []
        for a in range(nv):
            for b in range(a + 1, nv):
                if comp[a] != comp[b]:
                    options.append((a, b))
        options += [(a, nv) for a in range(nv)]
        options.append((nv, nv + 1))
        for a, b in options:
            new_comp = list(comp)
            if b >= nv:
                if a >= nv:
                    new_comp += [max(comp, default=-1) + 1] * 2
                else:
                    new_comp.append(comp[a])
            else:
                old, keep = comp[b], comp[a]
                new_comp = [keep if c == old else c for c in comp]
            edges.append((a, b))
            if self._ok_partial(edges, i):
                yield from self._grow(i + 1, edges, new_comp)
            edges.pop()


def _same_bases(M: IntMatrix, G: GraphRealization, r: int) -> bool:
    for S in itertools.combinations(range(len(M)), r):
        if (rank([M[i] for i in S]) == r) != G.is_acyclic(S):
            return False
    return True


def graph_realizations(matroid: LinearMatroid, deadline=None):
    """Yield graphs whose cycle matroid equals ``matroid``.

    A basis becomes a spanning forest; every other element joins the ends of
    the path formed by its fundamental circuit. Candidate graphs are checked
    against the matroid on every ``rank``-subset before being yielded.
    """
    matroid._check_bound()
    M = matroid.source
    r = matroid.rank()
    basis = _greedy_basis(M)
    coords = _basis_coordinates(M, basis) if r else [()] * len(M)
    supports = [frozenset(k for k, c in enumerate(cs) if c) for cs in coords]
    for nv, tree in _TreeSearch(r, supports, deadline):
        nv = max(nv, 1)
        edges = []
        for s in supports:
            if not s:
                edges.append((0, 0))
                continue
            deg = Counter()
            for k in s:
                deg.update(tree[k])
            ends = sorted(v for v, d in deg.items() if d == 1)
            edges.append((ends[0], ends[1]))
        G = GraphRealization(nv, tuple(edges))
        if _same_bases(M, G, r):
            yield G


def is_graphic_matroid(matroid, deadline=None) -> Optional[GraphRealization]:
    """A graph realization of the matroid, or ``None`` if there is none.

    Accepts a :class:`LinearMatroid` or a matrix. The fundamental circuits
    with respect to one basis determine a binary matroid, so the first forest
    on which they are all paths either realizes the matroid or proves it is
    not graphic.
    """
    if not isinstance(matroid, LinearMatroid):
        matroid = LinearMatroid(matroid)
    for G in graph_realizations(matroid, deadline):
        return G
    return None


# -- R10 --------------------------------------------------------------------


def _r10_profile():
    from .tumatrix import fixture

    R = LinearMatroid(fixture("R10"))
    circ = R.circuits()
    return circ, Counter(len(c) for c in circ)


def _isomorphic(circ_a, elems_a, circ_b, elems_b) -> bool:
    """Backtracking bijection mapping the circuit family ``circ_a`` onto ``circ_b``."""
    set_b = set(circ_b)
    sig_a = {x: sorted(len(c) for c in circ_a if x in c) for x in elems_a}
    sig_b = {y: sorted(len(c) for c in circ_b if y in c) for y in elems_b}
    if sorted(map(tuple, sig_a.values())) != sorted(map(tuple, sig_b.values())):
        return False
    order = sorted(elems_a)
    phi: Dict[int, int] = {}

    def consistent():
        for c in circ_a:
            if c <= phi.keys() and frozenset(phi[x] for x in c) not in set_b:
                return False
        return True

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        used = set(phi.values())
        for y in elems_b:
            if y not in used and sig_a[x] == sig_b[y]:
                phi[x] = y
                if consistent() and extend(i + 1):
                    return True
                del phi[x]
        return False

    return extend(0)


def has_r10_restriction(matroid) -> bool:
    """Does some 10-element restriction of this rank-5 matroid equal R10?

    Only rank 5 is supported: there an R10 minor needs no contraction, so
    restrictions are all minors to look at. Other ranks raise ``ValueError``.
    """
    if not isinstance(matroid, LinearMatroid):
        matroid = LinearMatroid(matroid)
    if matroid.rank() != 5:
        raise ValueError(f"R10 detection supports rank 5 only (rank is {matroid.rank()})")
    matroid._check_bound()
    if len(matroid) < 10:
        return False
    r10_circ, r10_sig = _r10_profile()
    circ = matroid.circuits()
    for S in itertools.combinations(matroid.ground_set, 10):
        fs = frozenset(S)
        inside = [c for c in circ if c <= fs]
        if Counter(len(c) for c in inside) != r10_sig or matroid.rank_of(fs) != 5:
            continue
        if _isomorphic(inside, S, r10_circ, range(10)):
            return True
    return False


# -- digraph polytopes --------------------------------------------------------


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices ``1 .. num_vertices``; arrows are ``(tail, head)``.

    Parallel arrows are allowed, loops are not.
    """

    num_vertices: int
    arrows: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        for i, j in self.arrows:
            if not (1 <= i <= self.num_vertices and 1 <= j <= self.num_vertices):
                raise ValueError(f"arrow {(i, j)} out of range 1..{self.num_vertices}")
            if i == j:
                raise ValueError("loops are not allowed")

    def arrow_vectors(self) -> IntMatrix:
        """``e_tail - e_head`` for every arrow."""
        d = self.num_vertices
        return tuple(tuple(int(k == i - 1) - int(k == j - 1) for k in range(d))
                     for i, j in self.arrows)


def polytope_from_digraph(G: Digraph) -> LatticePolytope:
    """Hull of the arrow vectors with the last coordinate dropped."""
    if not G.arrows:
        raise ValueError("digraph has no arrows")
    if G.num_vertices < 2:
        raise DimensionError("need at least two vertices")
    return LatticePolytope.hull([v[:-1] for v in G.arrow_vectors()])


def is_sfpdg(P: LatticePolytope, deadline: Optional[float] = None) -> Optional[Digraph]:
    """A digraph whose polytope is unimodularly equivalent to ``P``, or ``None``.

    ``P`` must be smooth Fano. Any lattice isomorphism onto a digraph polytope
    sends the vertices of a facet to arrows forming a spanning tree, so one
    facet basis suffices: enumerate labelled spanning trees on ``n + 1``
    vertices on which every other vertex's support is a path, orient the tree
    arrows in all ``2^n`` ways and accept when every vertex maps to some
    ``e_i - e_j``. ``deadline`` is a ``time.monotonic()`` value.
    """
    if not is_unimodular_polytope(P):
        return None
    n = P.ambient_dim
    facet = P.facets()[0]
    if len(facet.vertex_indices) != n:
        raise ValueError("P is not simplicial")
    from .linalg import inverse_unimodular, matmul

    basis = sorted(facet.vertex_indices)
    C = matmul(P.vertices, inverse_unimodular([P.vertices[i] for i in basis]))
    supports = [frozenset(k for k in range(n) if row[k]) for row in C]
    for nv, tree in _TreeSearch(n, supports, deadline):
        if nv != n + 1:
            continue
        for signs in itertools.product((1, -1), repeat=n):
            arrows = []
            for row in C:
                img = [0] * nv
                for k, c in enumerate(row):
                    if c:
                        a, b = tree[k]
                        if signs[k] < 0:
                            a, b = b, a
                        img[a] += c
                        img[b] -= c
                pos = [v for v in range(nv) if img[v] == 1]
                neg = [v for v in range(nv) if img[v] == -1]
                if len(pos) != 1 or len(neg) != 1 or sum(map(abs, img)) != 2:
                    break
                arrows.append((pos[0] + 1, neg[0] + 1))
            else:
                G = Digraph(nv, tuple(arrows))
                Q = polytope_from_digraph(G)
                if Q.dim == n and unimodular_equivalent(P, Q) is not None:
                    return G
    return None
