import functools
import itertools
import os
import random

import pytest
from hypothesis import HealthCheck, settings

from usfp.classify import bundled_corpus
from usfp.matroid import Digraph, polytope_from_digraph
from usfp.polytope import LatticePolytope, dual_polytope, is_smooth_fano, is_unimodular_polytope

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

TRIANGLE = ((1, 0), (0, 1), (-1, -1))
TRIANGLE_DUAL = ((-1, -1), (2, -1), (-1, 2))
SQUARE = ((1, 1), (1, -1), (-1, 1), (-1, -1))
CROSS = ((1, 0), (0, 1), (-1, 0), (0, -1))


@functools.lru_cache(maxsize=None)
def corpus(dim):
    """(entry, polytope, dual) triples for a bundled corpus."""
    out = []
    for e in bundled_corpus(dim):
        P = e.polytope()
        out.append((e, P, dual_polytope(P)))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def usfps(dim):
    return tuple((e, P, Q) for e, P, Q in corpus(dim) if is_unimodular_polytope(P))


def free_sum(P, Q):
    """conv(P x 0 and 0 x Q); unimodular smooth Fano when both factors are."""
    n, m = P.ambient_dim, Q.ambient_dim
    rows = [tuple(v) + (0,) * m for v in P.vertices] + [(0,) * n + tuple(w) for w in Q.vertices]
    return LatticePolytope(rows)


@functools.lru_cache(maxsize=None)
def dim5_usfps(limit=None):
    """A deterministic sample of 5-dimensional unimodular smooth Fano polytopes.

    Free sums of lower-dimensional ones, polytopes of random digraphs on six
    vertices, and hulls of random totally unimodular row sets.
    """
    seen = set()
    out = []

    def add(P):
        key = P.vertex_set()
        if key not in seen and P.dim == 5 and is_smooth_fano(P) and is_unimodular_polytope(P):
            seen.add(key)
            out.append(P)

    segment = LatticePolytope([(1,), (-1,)])
    for (_, A, _), (_, B, _) in itertools.product(usfps(2), usfps(3)):
        add(free_sum(A, B))
    for _, B, _ in usfps(4)[:40]:
        add(free_sum(segment, B))
    rng = random.Random(5)
    pairs = [(i, j) for i in range(1, 7) for j in range(1, 7) if i != j]
    tries = 0
    while tries < 400:
        tries += 1
        arrows = rng.sample(pairs, rng.randint(6, 12))
        P = polytope_from_digraph(Digraph(6, arrows))
        if P.dim == 5:
            add(P)
    from usfp.tumatrix import is_totally_unimodular
    unit = [tuple(int(i == j) for j in range(5)) for i in range(5)]
    for _ in range(300):
        rows = list(unit)
        for _ in range(rng.randint(5, 9)):
            cand = tuple(rng.choice((-1, 0, 0, 1)) for _ in range(5))
            if any(cand) and cand not in rows and is_totally_unimodular(rows + [cand]):
                rows.append(cand)
        P = LatticePolytope.hull(rows)
        if len(P.vertices) == len(rows):
            add(P)
    return tuple(out[:limit] if limit else out)


# -- acceptance summary --------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def triangle():
    return LatticePolytope(TRIANGLE)


@pytest.fixture
def triangle_dual():
    return LatticePolytope(TRIANGLE_DUAL)


@pytest.fixture
def square():
    return LatticePolytope(SQUARE)


@pytest.fixture
def cross():
    return LatticePolytope(CROSS)
