"""
Exact integer and rational linear algebra.

Matrices are plain tuples of tuples of Python ints (row-major, one row per
point or ground element). Python ints are arbitrary precision, so nothing
here can overflow, and no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

IntMatrix = Tuple[Tuple[int, ...], ...]
IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]


class DimensionError(ValueError):
    """Raised when matrix or vector shapes do not fit an operation."""


class NotUnimodularError(ValueError):
    """Raised when a matrix that must have determinant +-1 does not."""


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    """Validate and freeze an integer matrix.

    Accepts nested lists, tuples or numpy arrays. Every row must have the same
    positive length and every entry must be an integer.
    """
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, bool) or int(x) != x:
                raise TypeError(f"non-integer entry {x!r}")
            r.append(int(x))
        out.append(tuple(r))
    if not out or not out[0]:
        raise DimensionError("matrix needs at least one row and one column")
    width = len(out[0])
    if any(len(r) != width for r in out):
        raise DimensionError("ragged matrix")
    return tuple(out)


def shape(M: Sequence[Sequence[int]]) -> Tuple[int, int]:
    return len(M), (len(M[0]) if len(M) else 0)


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(zip(*M))


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if len(A[0]) != len(B):
        raise DimensionError(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def vecmat(v: Sequence[int], M: Sequence[Sequence[int]]) -> IntVector:
    """Row vector times matrix."""
    if len(v) != len(M):
        raise DimensionError("length mismatch")
    return tuple(sum(x * row[j] for x, row in zip(v, M)) for j in range(len(M[0])))


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionError(f"determinant of non-square {shape(M)} matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            Ai, Ak = A[i], A[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                Ai[j] = (Ai[j] * akk - aik * Ak[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def det_cofactor(M: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row. Test oracle only."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionError("determinant of non-square matrix")
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in (tuple(r) for r in M[1:])]
            total += (-1) ** j * a * det_cofactor(minor)
    return total


def rank(M: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, fraction-free elimination."""
    A = [list(row) for row in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, rows):
            f = A[i][c]
            if f:
                Ai, Ar = A[i], A[r]
                for j in range(c, cols):
                    Ai[j] = Ai[j] * p - f * Ar[j]
                g = 0
                for x in Ai:
                    g = gcd(g, x)
                if g > 1:
                    A[i] = [x // g for x in Ai]
        r += 1
        if r == rows:
            break
    return r


def solve_exact(A: Sequence[Sequence[int]], b: Sequence) -> Optional[RatVector]:
    """Solve ``A x = b`` for square ``A``; ``None`` if ``A`` is singular."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionError("solve_exact needs a square matrix")
    if len(b) != n:
        raise DimensionError("right-hand side length mismatch")
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(row[n] for row in aug)


def inverse_unimodular(N: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(N)
    if any(len(row) != n for row in N):
        raise DimensionError("inverse of non-square matrix")
    d = det(N)
    if d not in (1, -1):
        raise NotUnimodularError(f"determinant is {d}, not +-1")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(N)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = tuple(tuple(int(x) for x in row[n:]) for row in aug)
    return inv


def is_primitive(v: Sequence[int]) -> bool:
    """True iff the gcd of the entries is 1."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("the zero vector has no primitivity")
    return g == 1


def primitive_part(v: Sequence[int]) -> IntVector:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(x // g for x in v)


def delete_columns(M: Sequence[Sequence[int]], keep: Iterable[int]) -> IntMatrix:
    """Keep only the columns indexed by ``keep`` (0-based), in increasing order."""
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("need at least one column")
    width = len(M[0])
    bad = [j for j in keep if not 0 <= j < width]
    if bad:
        raise IndexError(f"column indices out of range: {bad}")
    return tuple(tuple(row[j] for j in keep) for row in M)


def submatrix(M: Sequence[Sequence[int]], rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
    cols = list(cols)
    return tuple(tuple(M[i][j] for j in cols) for i in rows)
