"""
Corpus ingestion and classification.

A corpus is a JSON-lines file with one object per polytope::

    {"id": "sfp3d.0001", "dim": 3, "vertices": [[1, 0, 0], ...]}

Each smooth Fano polytope gets five flags: ``smooth_fano``, ``usfp``
(unimodular), ``sfpdg`` (comes from a digraph), ``dual_ut_free`` and
``dual_dmp`` (dual deeply monotone). A flag is ``None`` when it was not
computed: the polytope is not smooth Fano, or the check hit its timeout.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .matroid import SearchLimitError, is_sfpdg
from .monotone import is_deeply_smooth, is_ut_free
from .polytope import (
    LatticePolytope,
    dual_polytope,
    is_smooth_fano,
    is_unimodular_polytope,
    unimodular_equivalent,
)

FLAGS = ("smooth_fano", "dual_ut_free", "dual_dmp", "sfpdg", "usfp")
TABLE_HEADER = ("dim", "SFP", "UT-free", "DMP", "SFPdG", "USFP")


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    dim: int
    vertices: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.vertices)
        object.__setattr__(self, "vertices", rows)
        if not rows:
            raise ValueError(f"entry {self.id!r} has no vertices")
        for r in rows:
            if len(r) != self.dim:
                raise ValueError(f"entry {self.id!r}: row {list(r)} has length {len(r)}, "
                                 f"expected dim {self.dim}")
            if any(isinstance(x, bool) or not isinstance(x, int) for x in r):
                raise ValueError(f"entry {self.id!r}: non-integer entry in row {list(r)}")

    def polytope(self) -> LatticePolytope:
        return LatticePolytope(self.vertices)

    def to_json(self) -> str:
        return json.dumps({"id": self.id, "dim": self.dim, "vertices": [list(r) for r in self.vertices]})


def _entries_from_lines(lines: Iterable[str], source: str) -> List[CorpusEntry]:
    out: List[CorpusEntry] = []
    seen = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            entry = CorpusEntry(str(obj["id"]), int(obj["dim"]), obj["vertices"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{source}:{lineno}: {exc}") from None
        if entry.id in seen:
            raise ValueError(f"{source}:{lineno}: duplicate id {entry.id!r}")
        seen.add(entry.id)
        out.append(entry)
    return out


def load_corpus(path: Union[str, Path]) -> List[CorpusEntry]:
    """Read a JSON-lines corpus; errors carry the file name and line number."""
    with open(path) as fh:
        return _entries_from_lines(fh, str(path))


def bundled_corpus(dim: int) -> List[CorpusEntry]:
    """The packaged classification of smooth Fano polytopes of dimension 2, 3 or 4."""
    name = f"sfp{dim}.jsonl"
    res = resources.files("usfp") / "data" / name
    if not res.is_file():
        raise FileNotFoundError(f"no bundled corpus for dimension {dim}")
    return _entries_from_lines(res.read_text().splitlines(), name)


def write_corpus(entries: Iterable[CorpusEntry], path: Union[str, Path]) -> None:
    with open(path, "w") as fh:
        for e in entries:
            fh.write(e.to_json() + "\n")


def _parse_int(x, where):
    if isinstance(x, bool):
        raise ValueError(f"{where}: boolean entry")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and x.strip().lstrip("-").isdigit():
        return int(x)
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise ValueError(f"{where}: non-integer entry {x!r}")


def import_polydb(path: Union[str, Path]) -> List[CorpusEntry]:
    """Convert a polyDB-style JSON export into corpus entries.

    The file holds a list of objects (or one object). Ids come from ``_id``,
    ``id`` or ``name``; vertex rows from ``VERTICES``, ``vertices`` or
    ``POINTS``, either as lists or as whitespace-separated strings. Rows are
    homogeneous with leading coordinate 1, which is stripped. Other fields
    are ignored.

    Raises:
        ValueError: a row does not start with 1, or an object lacks an id or
            vertices.
    """
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = [data]
    out = []
    for k, obj in enumerate(data):
        ident = next((obj[key] for key in ("_id", "id", "name") if key in obj), None)
        rows = next((obj[key] for key in ("VERTICES", "vertices", "POINTS") if key in obj), None)
        if ident is None or rows is None:
            raise ValueError(f"object {k}: missing id or vertex field")
        verts = []
        for r, row in enumerate(rows):
            where = f"{ident} row {r}"
            if isinstance(row, str):
                row = row.split()
            vals = [_parse_int(x, where) for x in row]
            if not vals or vals[0] != 1:
                raise ValueError(f"{where}: leading coordinate must be 1 (homogeneous), got {row}")
            verts.append(tuple(vals[1:]))
        out.append(CorpusEntry(str(ident), len(verts[0]), tuple(verts)))
    return out


# -- classification ---------------------------------------------------------


@dataclass
class ClassificationRecord:
    id: str
    dim: int
    flags: Dict[str, Optional[bool]]
    sfpdg_arrows: Optional[List[Tuple[int, int]]] = None
    timings: Dict[str, float] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def classify_polytope(entry: CorpusEntry, timeout: Optional[float] = None) -> ClassificationRecord:
    """All five flags for one entry; problems become flags and diagnostics.

    ``timeout`` (seconds) bounds the digraph search; when it runs out the
    ``sfpdg`` flag is ``None``.
    """
    flags: Dict[str, Optional[bool]] = dict.fromkeys(FLAGS)
    rec = ClassificationRecord(entry.id, entry.dim, flags)

    def timed(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        finally:
            rec.timings[name] = round(time.perf_counter() - t0, 6)

    try:
        P = entry.polytope()
    except ValueError as exc:
        flags["smooth_fano"] = False
        rec.diagnostics.append(str(exc))
        return rec
    report = timed("smooth_fano", lambda: is_smooth_fano(P))
    flags["smooth_fano"] = bool(report)
    if not report:
        rec.diagnostics.append(f"not smooth Fano: {report}")
        return rec
    flags["usfp"] = timed("usfp", lambda: is_unimodular_polytope(P))
    Q = dual_polytope(P)
    flags["dual_ut_free"] = timed("dual_ut_free", lambda: is_ut_free(Q))
    flags["dual_dmp"] = timed("dual_dmp", lambda: is_deeply_smooth(Q))
    deadline = None if timeout is None else time.monotonic() + timeout
    try:
        G = timed("sfpdg", lambda: is_sfpdg(P, deadline=deadline))
        flags["sfpdg"] = G is not None
        if G is not None:
            rec.sfpdg_arrows = [list(a) for a in G.arrows]
    except SearchLimitError:
        rec.diagnostics.append(f"sfpdg: timed out after {timeout}s")
    return rec


@dataclass
class CorpusClassification:
    """Records sorted by id and per-dimension counts of true flags."""

    records: List[ClassificationRecord]

    def counts(self) -> Dict[int, Tuple[int, ...]]:
        out: Dict[int, List[int]] = {}
        for r in self.records:
            row = out.setdefault(r.dim, [0] * len(FLAGS))
            for k, name in enumerate(FLAGS):
                row[k] += r.flags[name] is True
        return {d: tuple(v) for d, v in sorted(out.items())}

    def unknown(self) -> Dict[str, List[str]]:
        """Ids of smooth Fano entries with a flag left undecided."""
        out: Dict[str, List[str]] = {}
        for r in self.records:
            if r.flags["smooth_fano"]:
                for name in FLAGS:
                    if r.flags[name] is None:
                        out.setdefault(name, []).append(r.id)
        return out

    def table(self, fmt: str = "md") -> str:
        rows = [(d,) + c for d, c in self.counts().items()]
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(TABLE_HEADER)
            w.writerows(rows)
            return buf.getvalue()
        if fmt == "json":
            return json.dumps({"columns": TABLE_HEADER, "rows": rows,
                               "unknown": self.unknown()}, indent=2)
        if fmt != "md":
            raise ValueError(f"unknown format {fmt!r}")
        lines = ["| " + " | ".join(TABLE_HEADER) + " |",
                 "|" + "---|" * len(TABLE_HEADER)]
        lines += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
        for name, ids in self.unknown().items():
            lines.append(f"\nUndecided `{name}` (timeout): {', '.join(ids)}")
        return "\n".join(lines) + "\n"

    def records_jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)


def _classify_star(args):
    return classify_polytope(*args)


def classify_corpus(entries: Sequence[CorpusEntry], *, jobs: int = 1,
                    timeout: Optional[float] = None,
                    max_dim: Optional[int] = None) -> CorpusClassification:
    """Classify every entry (optionally in ``jobs`` worker processes).

    The result does not depend on ``jobs``: records are sorted by id.
    """
    todo = [(e, timeout) for e in entries if max_dim is None or e.dim <= max_dim]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_classify_star, todo, chunksize=4))
    else:
        records = [classify_polytope(*t) for t in todo]
    records.sort(key=lambda r: r.id)
    return CorpusClassification(records)


# -- inclusion checks -------------------------------------------------------

PROVEN = {
    "dual_dmp => dual_ut_free": ("dual_dmp", "dual_ut_free"),
    "dual_dmp => usfp": ("dual_dmp", "usfp"),
    "sfpdg => usfp": ("sfpdg", "usfp"),
}
CONJECTURED = {
    "dual_ut_free => usfp": ("dual_ut_free", "usfp"),
    "dual_ut_free => sfpdg": ("dual_ut_free", "sfpdg"),
}


@dataclass
class InclusionReport:
    """Counterexamples per implication; ``ok`` refers to proven implications only.

    The conjectured inclusions are reported separately. Zero counterexamples
    there is empirical evidence on the data checked, not a proof.
    """

    checked: int
    violations: Dict[str, List[str]]
    conjecture_counterexamples: Dict[str, List[str]]

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def render(self) -> str:
        lines = [f"records checked: {self.checked}", "proven implications:"]
        for name, ids in self.violations.items():
            lines.append(f"  {name}: {'OK' if not ids else 'VIOLATED by ' + ', '.join(ids)}")
        lines.append("conjectured inclusions (empirical evidence only, not a proof):")
        for name, ids in self.conjecture_counterexamples.items():
            lines.append(f"  {name}: {len(ids)} counterexample(s)"
                         + (": " + ", ".join(ids) if ids else ""))
        return "\n".join(lines) + "\n"


def check_inclusions(records: Iterable[ClassificationRecord]) -> InclusionReport:
    """Test the flag implications on every record with both flags decided."""
    records = list(records)

    def failing(a, b):
        return [r.id for r in records if r.flags.get(a) is True and r.flags.get(b) is False]

    return InclusionReport(
        len(records),
        {name: failing(a, b) for name, (a, b) in PROVEN.items()},
        {name: failing(a, b) for name, (a, b) in CONJECTURED.items()},
    )


# -- dimension 2 generator ----------------------------------------------------


def generate_dim2_corpus() -> List[CorpusEntry]:
    """All smooth Fano polygons up to unimodular equivalence.

    Every smooth Fano polygon is equivalent to one whose vertices are among
    the eight nonzero points of ``[-1, 1]^2``; search those subsets and keep
    one polygon per equivalence class.
    """
    pts = [p for p in itertools.product((-1, 0, 1), repeat=2) if any(p)]
    classes: List[LatticePolytope] = []
    for k in range(3, len(pts) + 1):
        for S in itertools.combinations(pts, k):
            P = LatticePolytope.hull(S)
            if len(P.vertices) != k or P.dim != 2 or not is_smooth_fano(P):
                continue
            if any(len(C.vertices) == k and unimodular_equivalent(P, C) is not None
                   for C in classes):
                continue
            classes.append(P)
    return [CorpusEntry(f"gen2.{i:04d}", 2, P.vertices) for i, P in enumerate(classes, 1)]
