import itertools
import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import corpus
from usfp.linalg import det, identity, rank
from usfp.matroid import LinearMatroid
from usfp.polytope import LatticePolytope, is_unimodular_polytope
from usfp.tumatrix import (
    FIXTURES,
    fixture,
    ghouila_houri_is_tu,
    is_graphic_matrix,
    is_totally_unimodular,
    k_sum,
    matroid_dual_matrix,
    row_split,
    standard_form,
    tu_witness_matrix,
)


def ternary(max_r=5, max_c=5):
    return st.tuples(st.integers(1, max_r), st.integers(1, max_c)).flatmap(
        lambda rc: st.lists(st.lists(st.sampled_from((-1, 0, 1)), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def all_minors_ok(M):
    """Independent oracle: plain Bareiss determinants of every square submatrix."""
    m, n = len(M), len(M[0])
    for k in range(1, min(m, n) + 1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                if det([[M[i][j] for j in cols] for i in rows]) not in (-1, 0, 1):
                    return False
    return True


def test_tu_examples():
    assert is_totally_unimodular(fixture("R10"))
    rep = is_totally_unimodular([[1, -1], [1, 1]])
    assert not rep and rep.det == 2
    assert is_totally_unimodular(fixture("nongraphic_usfp_6d"))


def test_witness_determinant_is_bad():
    M = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    rep = is_totally_unimodular(M)
    assert not rep
    W = tu_witness_matrix(M, rep)
    assert det(W) == rep.det and rep.det not in (-1, 0, 1)


def test_large_entry_fails_on_1x1():
    rep = is_totally_unimodular([[0, 2]])
    assert not rep and rep.det == 2


@given(ternary())
def test_brute_force_matches_minor_oracle(M):
    assert bool(is_totally_unimodular(M)) == all_minors_ok(M)


@given(ternary(6, 6))
def test_oracles_agree(M):
    assert bool(is_totally_unimodular(M)) == ghouila_houri_is_tu(M)


def test_oracles_agree_on_1000_random_matrices():
    rng = random.Random(20240601)
    n_tu = 0
    for _ in range(1000):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        density = rng.choice((0.3, 0.5, 0.8))
        M = [[rng.choice((-1, 1)) if rng.random() < density else 0 for _ in range(c)]
             for _ in range(r)]
        tu = bool(is_totally_unimodular(M))
        assert tu == ghouila_houri_is_tu(M)
        n_tu += tu
    assert 50 < n_tu < 950  # both verdicts are exercised


def test_oracles_agree_on_fixtures():
    for name, M in FIXTURES.items():
        assert bool(is_totally_unimodular(M)) == ghouila_houri_is_tu(M), name


def test_k33_fixture_is_not_tu_over_integers():
    M = fixture("K33dual")
    rep = is_totally_unimodular(M)
    assert not rep and abs(rep.det) == 2
    assert not ghouila_houri_is_tu(M)
    # the offending minors are +-2, i.e. -+1 over GF(3), and no minor is 3 or more
    dets = {det([[M[i][j] for j in cols] for i in rows])
            for k in range(1, 5)
            for rows in itertools.combinations(range(8), k)
            for cols in itertools.combinations(range(4), k)}
    assert max(map(abs, dets)) == 2


def test_entry_bound():
    for M in FIXTURES.values():
        if is_totally_unimodular(M):
            assert all(x in (-1, 0, 1) for r in M for x in r)


def test_standard_form_examples(cross, triangle):
    f = next(k for k, f in enumerate(cross.facets())
             if {cross.vertices[i] for i in f.vertex_indices} == {(1, 0), (0, 1)})
    assert standard_form(cross, f) == ((1, 0), (0, 1), (-1, 0), (0, -1))
    f = next(k for k, f in enumerate(triangle.facets())
             if {triangle.vertices[i] for i in f.vertex_indices} == {(1, 0), (0, 1)})
    assert standard_form(triangle, f) == ((1, 0), (0, 1), (-1, -1))


def test_standard_form_errors(triangle):
    with pytest.raises(IndexError):
        standard_form(triangle, 5)
    bad = LatticePolytope([(1, 0), (0, 1), (-1, -2)])
    with pytest.raises(ValueError):
        standard_form(bad, next(k for k, f in enumerate(bad.facets())
                                if abs(det([bad.vertices[i] for i in sorted(f.vertex_indices)])) != 1))


def test_standard_form_of_corpus_usfps_is_tu():
    for d in (2, 3):
        for _, P, _ in corpus(d):
            if is_unimodular_polytope(P):
                for k in range(len(P.facets())):
                    M = standard_form(P, k)
                    assert is_totally_unimodular(M)
                    facet = sorted(P.facets()[k].vertex_indices)
                    assert [M[i] for i in facet] == list(identity(d))


def test_pivoting_preserves_tu():
    # every unimodular basis of a TU matrix gives a TU pivoted matrix
    from usfp.linalg import inverse_unimodular, matmul
    for _, P, _ in corpus(3):
        if not is_unimodular_polytope(P):
            continue
        M = P.vertices
        for rows in itertools.combinations(range(len(M)), 3):
            N = [M[i] for i in rows]
            if abs(det(N)) == 1:
                assert is_totally_unimodular(matmul(M, inverse_unimodular(N)))


def test_row_split_demo_matrix():
    s = row_split(fixture("split_demo"), range(6))
    assert s.plus == (0, 1, 2, 3) and s.minus == (4, 5)
    assert s.combined == (1, -1, 1, 1)


def test_row_split_single_row():
    M = fixture("R10")
    for i in range(10):
        s = row_split(M, [i])
        assert s.plus == (i,) and s.minus == () and s.combined == M[i]


def test_row_split_failure():
    with pytest.raises(ValueError):
        row_split([[1, -1], [1, 1]], [0, 1])


@given(st.data())
def test_row_split_valid_on_tu_matrices(data):
    M = data.draw(ternary(6, 4))
    assume(is_totally_unimodular(M))
    rows = data.draw(st.lists(st.integers(0, len(M) - 1), min_size=1, unique=True))
    s = row_split(M, rows)
    assert set(s.plus) | set(s.minus) == set(rows) and not set(s.plus) & set(s.minus)
    expect = [sum(M[i][j] for i in s.plus) - sum(M[i][j] for i in s.minus) for j in range(len(M[0]))]
    assert list(s.combined) == expect and all(abs(x) <= 1 for x in expect)


def test_matroid_dual_basis_only():
    D = matroid_dual_matrix(identity(2))
    assert D == ((), ())


def test_matroid_dual_triangle_graph():
    M = ((1, 0), (0, 1), (1, -1))
    D = matroid_dual_matrix(M)
    assert D == ((-1,), (1,), (1,))
    assert rank(M) + rank(D) == 3


def test_matroid_dual_standard_layout():
    A = ((1, 0, -1), (1, 1, 0))  # rows of A^T below the identity
    M = identity(3) + A
    D = matroid_dual_matrix(M)
    assert D[:3] == ((-1, -1), (0, -1), (1, 0))
    assert D[3:] == identity(2)


def test_matroid_dual_needs_identity():
    with pytest.raises(ValueError):
        matroid_dual_matrix([[1, 1], [1, -1]])


@given(st.data())
def test_dual_rank_identity_and_double_dual(data):
    n = data.draw(st.integers(1, 4))
    extra = data.draw(st.lists(st.lists(st.sampled_from((-1, 0, 1)), min_size=n, max_size=n),
                               max_size=4))
    M = identity(n) + tuple(tuple(r) for r in extra)
    D = matroid_dual_matrix(M)
    if not extra:
        return
    assert rank(M) + rank(D) == len(M)
    DD = matroid_dual_matrix(D)
    a, b = LinearMatroid(M), LinearMatroid(DD)
    for k in range(len(M) + 1):
        for S in itertools.combinations(range(len(M)), k):
            assert a.rank_of(S) == b.rank_of(S)


def test_k_sum_examples():
    assert k_sum(identity(2), identity(2), 1) == identity(4)
    assert k_sum([[1]], [[1]], 2, a1=[1], a2=[1]) == ((1, 1, 0), (0, 1, 1))


def test_k_sum_errors():
    with pytest.raises(ValueError):
        k_sum([[1, 1], [1, -1]], [[1]], 1)
    with pytest.raises(Exception):
        k_sum([[1]], [[1]], 2, a1=[1, 1], a2=[1])
    with pytest.raises(ValueError):
        k_sum([[1]], [[1]], 4)


@given(st.data())
def test_k_sums_preserve_tu(data):
    k = data.draw(st.integers(1, 3))
    r1, c1, r2, c2 = (data.draw(st.integers(1, 3)) for _ in range(4))
    tern = st.sampled_from((-1, 0, 0, 1))
    A1 = data.draw(st.lists(st.lists(tern, min_size=c1, max_size=c1), min_size=r1, max_size=r1))
    A2 = data.draw(st.lists(st.lists(tern, min_size=c2, max_size=c2), min_size=r2, max_size=r2))
    glue = {name: data.draw(st.lists(tern, min_size=r, max_size=r))
            for name, r in (("a1", r1), ("b1", r1), ("a2", r2), ("b2", r2))}
    if k < 3:
        glue.pop("b1"), glue.pop("b2")
    if k == 1:
        glue = {}
    try:
        M = k_sum(A1, A2, k, **glue)
    except ValueError:
        assume(False)
    assert is_totally_unimodular(M)


def test_is_graphic_matrix():
    assert is_graphic_matrix([[1, -1, 0], [0, 1, -1]])
    assert not is_graphic_matrix(fixture("R10"))
    assert not is_graphic_matrix(fixture("nongraphic_usfp_6d"))
    assert not is_graphic_matrix([[2, 0], [0, 1]])


def test_fixtures():
    assert all(sum(r) == 1 for r in fixture("R10"))
    assert len(fixture("K33dual")) == 8 and len(fixture("K33dual")[0]) == 4
    assert len(fixture("k33_usfp_4d")) == 9 and len(fixture("k33_usfp_4d")[0]) == 4
    assert len(fixture("K5dual")) == 10 and len(fixture("split_demo")) == 6
    with pytest.raises(KeyError):
        fixture("nope")
