"""Exact tools for unimodular smooth Fano polytopes and their monotone duals."""

from .linalg import (
    DimensionError,
    NotUnimodularError,
    delete_columns,
    det,
    inverse_unimodular,
    is_primitive,
    rank,
    solve_exact,
)
from .polytope import (
    FaceRef,
    Facet,
    LatticePolytope,
    canonical_form,
    dual_polytope,
    faces,
    facets,
    is_projective,
    is_reflexive,
    is_smooth_fano,
    is_unimodular_polytope,
    lattice_points,
    project,
    symmetric_points,
    unimodular_equivalent,
)
from .tumatrix import (
    RowSplit,
    TUReport,
    fixture,
    ghouila_houri_is_tu,
    is_graphic_matrix,
    is_totally_unimodular,
    k_sum,
    matroid_dual_matrix,
    row_split,
    standard_form,
)
from .matroid import (
    Digraph,
    GraphRealization,
    LinearMatroid,
    SearchLimitError,
    has_r10_restriction,
    is_graphic_matroid,
    is_sfpdg,
    polytope_from_digraph,
)
from .ewald import (
    EwaldReport,
    EwaldWitness,
    find_star_ewald_point,
    star_ewald,
    strong_ewald,
    strong_ewald_transform,
    weak_ewald,
)
from .monotone import (
    CornerFrame,
    DisplacementReport,
    corner_frame,
    deeply_smooth_via_displacements,
    edge_pair_witnesses,
    first_displacement,
    is_deeply_smooth,
    is_ut_free,
    vertex_is_negated_frame_sum,
)
from .classify import (
    ClassificationRecord,
    CorpusEntry,
    bundled_corpus,
    check_inclusions,
    classify_corpus,
    classify_polytope,
    generate_dim2_corpus,
    import_polydb,
    load_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "DimensionError",
    "NotUnimodularError",
    "delete_columns",
    "det",
    "inverse_unimodular",
    "is_primitive",
    "rank",
    "solve_exact",
    "FaceRef",
    "Facet",
    "LatticePolytope",
    "canonical_form",
    "dual_polytope",
    "faces",
    "facets",
    "is_projective",
    "is_reflexive",
    "is_smooth_fano",
    "is_unimodular_polytope",
    "lattice_points",
    "project",
    "symmetric_points",
    "unimodular_equivalent",
    "RowSplit",
    "TUReport",
    "fixture",
    "ghouila_houri_is_tu",
    "is_graphic_matrix",
    "is_totally_unimodular",
    "k_sum",
    "matroid_dual_matrix",
    "row_split",
    "standard_form",
    "Digraph",
    "GraphRealization",
    "LinearMatroid",
    "SearchLimitError",
    "has_r10_restriction",
    "is_graphic_matroid",
    "is_sfpdg",
    "polytope_from_digraph",
    "EwaldReport",
    "EwaldWitness",
    "find_star_ewald_point",
    "star_ewald",
    "strong_ewald",
    "strong_ewald_transform",
    "weak_ewald",
    "CornerFrame",
    "DisplacementReport",
    "corner_frame",
    "deeply_smooth_via_displacements",
    "edge_pair_witnesses",
    "first_displacement",
    "is_deeply_smooth",
    "is_ut_free",
    "vertex_is_negated_frame_sum",
    "ClassificationRecord",
    "CorpusEntry",
    "bundled_corpus",
    "check_inclusions",
    "classify_corpus",
    "classify_polytope",
    "generate_dim2_corpus",
    "import_polydb",
    "load_corpus",
]
