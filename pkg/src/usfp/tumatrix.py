"""
Totally unimodular matrices.

Brute-force recognition (every square minor), an independent Ghouila-Houri
style oracle built on row splits, standard forms of smooth Fano polytopes,
matroid duals, k-sums and the structural test for graphic matrices. The named
matrices used throughout the tests live in :data:`FIXTURES`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .linalg import (
    DimensionError,
    IntMatrix,
    IntVector,
    as_matrix,
    inverse_unimodular,
    matmul,
    transpose,
)

FIXTURES: Dict[str, IntMatrix] = {
    "R10": (
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1),
        (-1, 1, 0, 0, 1),
        (1, -1, 1, 0, 0),
        (0, 1, -1, 1, 0),
        (0, 0, 1, -1, 1),
        (1, 0, 0, 1, -1),
    ),
    # A GF(3) representation of the dual of the cycle matroid of K_{3,3}. Over
    # the integers rows 0 and 3 on columns 1 and 3 give the minor
    # [[1, -1], [1, 1]] of determinant 2, so it is not totally unimodular.
    "K33dual": (
        (0, 1, -1, -1),
        (0, -1, 1, 0),
        (-1, 0, 1, 0),
        (-1, 1, 0, 1),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ),
    "K5dual": (
        (0, 0, 1, 0, -1, 1),
        (0, 1, 0, -1, 0, -1),
        (-1, 0, 0, 1, 1, 0),
        (1, -1, -1, 0, 0, 0),
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1),
    ),
    # Totally unimodular 6x4 matrix used to demonstrate row splits.
    "split_demo": (
        (-1, 1, 0, 1),
        (1, 0, 1, -1),
        (0, -1, 0, 0),
        (1, -1, 0, 0),
        (0, 0, 1, -1),
        (0, 0, -1, 0),
    ),
    # Vertices of a unimodular smooth Fano 4-polytope that does not come from a
    # digraph (its row matroid is not graphic).
    "k33_usfp_4d": (
        (0, 1, -1, 1),
        (0, 0, -1, 0),
        (1, -1, 1, 0),
        (0, 1, 0, 1),
        (0, 0, 0, -1),
        (-1, 0, 0, 0),
        (-1, 1, 0, 0),
        (0, -1, 0, 0),
        (1, -1, 1, -1),
    ),
    # Vertices of a unimodular smooth Fano 6-polytope whose vertex matrix is
    # not graphic in the structural sense.
    "nongraphic_usfp_6d": (
        (-1, -1, 0, 0, 0, 0),
        (-1, 0, -1, 0, 0, 1),
        (0, -1, 0, -1, -1, -1),
        (0, 0, -1, -1, 0, 0),
        (0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0),
        (1, 1, 1, 1, 1, 0),
    ),
}


def fixture(name: str) -> IntMatrix:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None


@dataclass(frozen=True)
class TUReport:
    is_tu: bool
    rows: Tuple[int, ...] = ()
    cols: Tuple[int, ...] = ()
    det: int = 0

    def __bool__(self):
        return self.is_tu


@dataclass(frozen=True)
class RowSplit:
    plus: Tuple[int, ...]
    minus: Tuple[int, ...]
    combined: IntVector


def is_totally_unimodular(M: Sequence[Sequence[int]]) -> TUReport:
    """Check every square minor; on failure report a smallest bad one.

    Minors of size k are expanded along their first row from the memoized
    minors of size k - 1, one size at a time.
    """
    M = as_matrix(M)
    m, n = len(M), len(M[0])
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x not in (-1, 0, 1):
                return TUReport(False, (i,), (j,), x)
    prev = {((i,), (j,)): M[i][j] for i in range(m) for j in range(n)}
    for k in range(2, min(m, n) + 1):
        cur = {}
        for rows in itertools.combinations(range(m), k):
            top = M[rows[0]]
            rest = rows[1:]
            for cols in itertools.combinations(range(n), k):
                d = 0
                for t, c in enumerate(cols):
                    a = top[c]
                    if a:
                        sub = prev[(rest, cols[:t] + cols[t + 1:])]
                        if sub:
                            d += -a * sub if t % 2 else a * sub
                if d not in (-1, 0, 1):
                    return TUReport(False, rows, cols, d)
                cur[(rows, cols)] = d
        prev = cur
    return TUReport(True)


def _split_ok(M, rows, signs):
    n = len(M[0])
    out = [0] * n
    for s, r in zip(signs, rows):
        row = M[r]
        for j in range(n):
            out[j] += s * row[j]
    if all(-1 <= x <= 1 for x in out):
        return tuple(out)
    return None


def row_split(M: Sequence[Sequence[int]], rows: Sequence[int]) -> RowSplit:
    """Signs for ``rows`` so the signed row sum has entries in {-1, 0, 1}.

    Search order: contiguous cuts first (plus = leading rows, minus = the
    rest, longest plus part first), then every sign vector in lexicographic
    order with + before -. Raises ``ValueError`` when no split exists, which
    certifies that ``M`` is not totally unimodular.
    """
    M = as_matrix(M)
    rows = tuple(rows)
    if any(not 0 <= r < len(M) for r in rows):
        raise IndexError("row index out of range")
    k = len(rows)
    orders = (tuple([1] * j + [-1] * (k - j)) for j in range(k - 1, 0, -1))
    for signs in itertools.chain(orders, itertools.product((1, -1), repeat=k)):
        combined = _split_ok(M, rows, signs)
        if combined is not None:
            plus = tuple(r for r, s in zip(rows, signs) if s > 0)
            minus = tuple(r for r, s in zip(rows, signs) if s < 0)
            return RowSplit(plus, minus, combined)
    raise ValueError(f"rows {rows} admit no split; the matrix is not totally unimodular")


def ghouila_houri_is_tu(M: Sequence[Sequence[int]]) -> bool:
    """TU test via row splits of every row subset.

    Runs on whichever of ``M`` and its transpose has fewer rows; a matrix is
    totally unimodular iff its transpose is.
    """
    M = as_matrix(M)
    if len(M) > len(M[0]):
        M = transpose(M)
    m = len(M)
    for k in range(1, m + 1):
        for rows in itertools.combinations(range(m), k):
            # a split and its negation are the same partition
            for tail in itertools.product((1, -1), repeat=k - 1):
                if _split_ok(M, rows, (1,) + tail) is not None:
                    break
            else:
                return False
    return True


def standard_form(P, facet_index: int) -> IntMatrix:
    """Vertex matrix times the inverse of a facet's vertex matrix.

    The facet's vertices become the unit vectors, in increasing vertex order.
    """
    facets = P.facets()
    if not 0 <= facet_index < len(facets):
        raise IndexError(f"polytope has {len(facets)} facets")
    idx = sorted(facets[facet_index].vertex_indices)
    if len(idx) != P.ambient_dim:
        raise ValueError("facet is not a simplex; polytope is not smooth")
    N = [P.vertices[i] for i in idx]
    return matmul(P.vertices, inverse_unimodular(N))


def _identity_rows(M: IntMatrix):
    n = len(M[0])
    basis = []
    for j in range(n):
        unit = tuple(int(i == j) for i in range(n))
        try:
            basis.append(M.index(unit))
        except ValueError:
            raise ValueError(f"no identity row for column {j}") from None
    return basis


def matroid_dual_matrix(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Matroid dual of a representation containing all unit rows.

    With ``M`` laid out as ``[I | A]^T`` the result is ``[-A^T | I]^T``; in
    general the rows equal to unit vectors play the role of the identity
    block and row order (the ground set) is preserved. When every row is a
    unit vector the result has no columns.
    """
    M = as_matrix(M)
    basis = _identity_rows(M)
    others = [i for i in range(len(M)) if i not in basis]
    pos = {r: k for k, r in enumerate(others)}
    out = []
    for i, row in enumerate(M):
        if i in pos:
            out.append(tuple(int(k == pos[i]) for k in range(len(others))))
        else:
            j = basis.index(i)
            out.append(tuple(-M[r][j] for r in others))
    return tuple(out)


def _hstack(*blocks):
    return tuple(sum((tuple(b[i]) for b in blocks), ()) for i in range(len(blocks[0])))


def _zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def _col(v):
    return tuple((x,) for x in v)


def k_sum(A1: Sequence[Sequence[int]], A2: Sequence[Sequence[int]], k: int,
          a1=None, a2=None, b1=None, b2=None, check: bool = True) -> IntMatrix:
    """1-, 2- or 3-sum of two matrices from their blocks and glue columns.

    * ``k = 1``: ``[[A1, 0], [0, A2]]``;
    * ``k = 2``: operands ``[[A1, a1], [0, 1]]`` and ``[[1, 0], [a2, A2]]``
      give ``[[A1, a1, 0], [0, a2, A2]]``;
    * ``k = 3``: operands ``[[A1, a1, b1], [0, 1, 1], [0, 1, 0], [0, 0, 1]]``
      and ``[[1, 1, 0], [1, 0, 0], [0, 1, 0], [a2, b2, A2]]`` give
      ``[[A1, a1, b1, 0], [0, a2, b2, A2]]``.

    With ``check`` the operands are required to be totally unimodular.
    """
    A1, A2 = as_matrix(A1), as_matrix(A2)
    r1, c1 = len(A1), len(A1[0])
    r2, c2 = len(A2), len(A2[0])

    def glue(v, r, name):
        if v is None or len(v) != r:
            raise DimensionError(f"{name} must have length {r}")
        return tuple(v)

    if k == 1:
        operands = [A1, A2]
        out = _hstack(A1, _zeros(r1, c2)) + _hstack(_zeros(r2, c1), A2)
    elif k == 2:
        a1, a2 = glue(a1, r1, "a1"), glue(a2, r2, "a2")
        operands = [
            _hstack(A1, _col(a1)) + ((0,) * c1 + (1,),),
            ((1,) + (0,) * c2,) + _hstack(_col(a2), A2),
        ]
        out = _hstack(A1, _col(a1), _zeros(r1, c2)) + _hstack(_zeros(r2, c1), _col(a2), A2)
    elif k == 3:
        a1, b1 = glue(a1, r1, "a1"), glue(b1, r1, "b1")
        a2, b2 = glue(a2, r2, "a2"), glue(b2, r2, "b2")
        z = (0,) * c1
        operands = [
            _hstack(A1, _col(a1), _col(b1)) + (z + (1, 1), z + (1, 0), z + (0, 1)),
            tuple((x, y) + (0,) * c2 for x, y in ((1, 1), (1, 0), (0, 1)))
            + _hstack(_col(a2), _col(b2), A2),
        ]
        out = _hstack(A1, _col(a1), _col(b1), _zeros(r1, c2)) \
            + _hstack(_zeros(r2, c1), _col(a2), _col(b2), A2)
    else:
        raise ValueError("k must be 1, 2 or 3")
    if check:
        for op in operands:
            if not is_totally_unimodular(op):
                raise ValueError("k-sum operands must be totally unimodular")
    return out


def is_graphic_matrix(M: Sequence[Sequence[int]]) -> bool:
    """Structural test: every column (or every row) has one or two nonzero
    entries, all equal to +-1, and a pair of nonzeros is one 1 and one -1."""
    M = as_matrix(M)

    def lines_ok(lines):
        for line in lines:
            nz = [x for x in line if x]
            if not 1 <= len(nz) <= 2 or any(x not in (1, -1) for x in nz):
                return False
            if len(nz) == 2 and sorted(nz) != [-1, 1]:
                return False
        return True

    return lines_ok(transpose(M)) or lines_ok(M)


def tu_witness_matrix(M: Sequence[Sequence[int]], report: TUReport) -> Optional[IntMatrix]:
    """The offending square submatrix of a failed :class:`TUReport`."""
    if report.is_tu:
        return None
    return tuple(tuple(M[i][j] for j in report.cols) for i in report.rows)
