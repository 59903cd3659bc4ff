"""Enumerate smooth Fano d-polytopes up to unimodular equivalence.

One-off tool used to build the bundled corpora in ``src/usfp/data``. Not part
of the library.

Search: fix a facet F = {e_1, ..., e_d} that is *special* (the vertex sum of
the polytope lies in the cone over F; every polytope has one). Grow the
complete unimodular fan ridge by ridge. Across a ridge ``tau = sigma - {v}``
the next facet is ``tau + {w}`` with ``w = -v + (combination of tau)``. Every
facet must satisfy ``<u, x> <= 0`` for every ray outside it, so each chosen
facet is a genuine facet of the convex hull of the rays found so far; once no
ridge is open, the facets close up into the whole boundary.

Finiteness: for a special facet every vertex v outside F has
``-d <= sum(v) <= 0`` and the sum of these levels is ``>= -d``. The facet
adjacent to F across the ridge opposite e_i has normal ``1 + t e_i*`` with
``t <= -1``, which gives ``v_i >= -(d + 1)``; then ``v_i <= (d-1)(d+1)``.

Usage: python tools/generate_corpus.py DIM OUT.jsonl
"""

from __future__ import annotations

import itertools
import json
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from usfp.linalg import inverse_unimodular  # noqa: E402


def candidate_pool(d):
    lo, hi = -(d + 1), (d - 1) * (d + 1)
    axes = [np.arange(lo, hi + 1)] * d
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, d)
    s = grid.sum(1)
    return grid[(s <= 0) & (s >= -d)].astype(np.int64)


class Facet:
    __slots__ = ("rays", "binv", "u")

    def __init__(self, rays, vectors):
        self.rays = tuple(rays)
        B = [vectors[r] for r in self.rays]
        self.binv = np.array(inverse_unimodular(B), dtype=np.int64)
        self.u = self.binv.sum(1)


def canonical_form(vertices):
    """Lexicographically least sorted vertex list over all ordered facet bases."""
    V = np.array(vertices, dtype=np.int64)
    facets = facet_sets(V)
    best = None
    for f in facets:
        for perm in itertools.permutations(f):
            B = V[list(perm)]
            inv = np.array(inverse_unimodular(B.tolist()), dtype=np.int64)
            W = V @ inv
            key = tuple(sorted(map(tuple, W.tolist())))
            if best is None or key < best:
                best = key
    return best


def facet_sets(V):
    d = V.shape[1]
    out = []
    for combo in itertools.combinations(range(len(V)), d):
        B = V[list(combo)]
        try:
            inv = np.array(inverse_unimodular(B.tolist()), dtype=np.int64)
        except ValueError:
            continue
        u = inv.sum(1)
        vals = V @ u
        if np.all(vals <= 1) and np.sum(vals == 1) == d:
            out.append(combo)
    return out


class Search:
    def __init__(self, d):
        self.d = d
        self.found = {}
        self.nodes = 0

    def run(self):
        d = self.d
        vectors = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        f0 = Facet(range(d), vectors)
        owners = {}
        frontier = set()
        for r in f0.rays:
            ridge = frozenset(f0.rays) - {r}
            owners[ridge] = 1
            frontier.add((ridge, 0, r))
        pool = candidate_pool(d)
        pool = pool[pool @ f0.u <= 0]
        self.dfs(vectors, [f0], owners, frontier, pool, 0)

    def candidates(self, vectors, facets, pool, level, ridge, fi, v):
        d = self.d
        sigma = facets[fi]
        pos = sigma.rays.index(v)
        g = sigma.binv[:, pos]
        u = sigma.u
        X = np.array(vectors, dtype=np.int64)
        others = [k for k in range(len(vectors)) if k not in ridge]
        Xo = X[others]
        a = Xo @ u
        b = Xo @ g
        out = []
        # existing rays
        for k in others:
            x = X[k]
            if x @ g != -1:
                continue
            s = x @ u
            mask = np.array([o != k for o in others])
            if np.all((a + b * (s - 1))[mask] <= 0):
                out.append(("old", k))
        # new rays
        budget = d + level
        P = pool[(pool @ g == -1) & (pool.sum(1) >= -budget)]
        if len(P):
            s = P @ u
            ok = np.all(a[:, None] + b[:, None] * (s[None, :] - 1) <= 0, axis=0)
            for p in P[ok]:
                out.append(("new", tuple(int(t) for t in p)))
        return out

    def dfs(self, vectors, facets, owners, frontier, pool, level):
        self.nodes += 1
        if not frontier:
            self.finish(vectors)
            return
        if len(vectors) > 3 * self.d:
            return
        best = None
        for item in sorted(frontier, key=lambda t: (sorted(t[0]), t[2])):
            ridge, fi, v = item
            cands = self.candidates(vectors, facets, pool, level, ridge, fi, v)
            if best is None or len(cands) < len(best[1]):
                best = (item, cands)
                if not cands:
                    return
        (ridge, fi, v), cands = best
        for kind, w in cands:
            if kind == "old":
                nvec = vectors
                k = w
                nlevel = level
            else:
                nvec = vectors + [w]
                k = len(vectors)
                nlevel = level + sum(w)
            rays = tuple(sorted(ridge | {k}))
            nf = Facet(rays, nvec)
            nowners = dict(owners)
            nfront = set(frontier)
            nfront.discard((ridge, fi, v))
            nowners[ridge] = 2
            bad = False
            newfi = len(facets)
            for r in rays:
                rr = frozenset(rays) - {r}
                if rr == ridge:
                    continue
                c = nowners.get(rr, 0)
                if c == 0:
                    nowners[rr] = 1
                    nfront.add((rr, newfi, r))
                elif c == 1:
                    nowners[rr] = 2
                    nfront = {t for t in nfront if t[0] != rr}
                else:
                    bad = True
                    break
            if bad:
                continue
            npool = pool[pool @ nf.u <= 0]
            self.dfs(nvec, facets + [nf], nowners, nfront, npool, nlevel)

    def finish(self, vectors):
        total = np.array(vectors).sum(0)
        if np.any(total < 0):
            return
        key = canonical_form(vectors)
        self.found.setdefault(key, vectors)


def main():
    d = int(sys.argv[1])
    out = sys.argv[2] if len(sys.argv) > 2 else None
    t0 = time.time()
    s = Search(d)
    s.run()
    print(f"dim {d}: {len(s.found)} classes, {s.nodes} nodes, {time.time() - t0:.1f}s")
    if out:
        keys = sorted(s.found, key=lambda k: (len(k), k))
        with open(out, "w") as fh:
            for i, key in enumerate(keys, 1):
                fh.write(json.dumps({"id": f"sfp{d}d.{i:04d}", "dim": d,
                                     "vertices": [list(r) for r in key]}) + "\n")


if __name__ == "__main__":
    main()
