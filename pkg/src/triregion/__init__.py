"""triregion: monomial ideals in three variables through lozenge tilings.

The package decides the weak Lefschetz property and syzygy-bundle
semistability for Artinian monomial ideals in K[x, y, z] by way of
punctured triangular regions: construction and analysis of the regions,
tiling existence and exact enumeration, exact integer linear algebra on
bi-adjacency matrices, family constructors, and SVG rendering.
"""

from .monomials import (
    DEGREE_CAP,
    IdealSyntaxError,
    Monomial,
    MonomialIdeal,
    NotArtinianError,
    ONE,
    X,
    Y,
    Z,
    monomials_of_degree,
    parse_ideal,
    revlex_key,
)
from .regions import (
    Balance,
    Puncture,
    PunctureRelation,
    TriangularRegion,
    build_region,
    classify_floating,
    monomial_ideal_of_region,
    monomial_subregion,
    overpuncturing,
    overpuncturing_ideal,
    puncture_list,
    region_json,
    relate_punctures,
    triangle_counts,
)
from .tilings import (
    ENUMERATION_CAP,
    Lozenge,
    StructuralTileability,
    Tiling,
    TilingCount,
    TwoOfThreeReport,
    enumerate_tilings,
    find_tiling,
    is_tileable_structural,
    tiling_json,
    two_of_three,
    validate_tiling,
)
from .matrices import (
    IntegerMatrix,
    PERMANENT_COLUMN_LIMIT,
    biadjacency,
    determinant,
    identity_matrix,
    matrix_grid,
    matrix_json,
    permanent,
    rank,
)
from .lefschetz import DegreeRecord, WlpReport, has_wlp, truncate, wlp_in_degree
from .stability import (
    CriterionReport,
    Semistability,
    criterion_check,
    decide_semistability,
)
from .families import (
    FIFTH_GENERATOR_NOTE,
    FamilyConstructionError,
    FamilySpec,
    convenient_degrees,
    convenient_family,
    example_family,
)
from .render import RenderOptions, region_svg, tiling_svg

__version__ = "0.1.0"

__all__ = [
    "Balance",
    "CriterionReport",
    "DEGREE_CAP",
    "DegreeRecord",
    "ENUMERATION_CAP",
    "FIFTH_GENERATOR_NOTE",
    "FamilyConstructionError",
    "FamilySpec",
    "IdealSyntaxError",
    "IntegerMatrix",
    "Lozenge",
    "Monomial",
    "MonomialIdeal",
    "NotArtinianError",
    "ONE",
    "PERMANENT_COLUMN_LIMIT",
    "Puncture",
    "PunctureRelation",
    "RenderOptions",
    "Semistability",
    "StructuralTileability",
    "Tiling",
    "TilingCount",
    "TriangularRegion",
    "TwoOfThreeReport",
    "WlpReport",
    "X",
    "Y",
    "Z",
    "biadjacency",
    "build_region",
    "classify_floating",
    "convenient_degrees",
    "convenient_family",
    "criterion_check",
    "decide_semistability",
    "determinant",
    "enumerate_tilings",
    "example_family",
    "find_tiling",
    "has_wlp",
    "identity_matrix",
    "is_tileable_structural",
    "matrix_grid",
    "matrix_json",
    "monomial_ideal_of_region",
    "monomial_subregion",
    "monomials_of_degree",
    "overpuncturing",
    "overpuncturing_ideal",
    "parse_ideal",
    "permanent",
    "puncture_list",
    "rank",
    "region_json",
    "region_svg",
    "relate_punctures",
    "revlex_key",
    "tiling_json",
    "tiling_svg",
    "triangle_counts",
    "truncate",
    "two_of_three",
    "validate_tiling",
    "wlp_in_degree",
]
