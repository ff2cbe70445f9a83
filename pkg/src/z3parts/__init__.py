"""Mod-3 box statistics on integer partitions.

The package provides: cell statistics and two mod-3 weights on Young
diagrams, boundary-label tests, streaming enumeration, the pair of Dyson
rearrangements with the {1,2}-composition decomposition they induce, the
split of any partition into short-descent and triple-column factors,
truncated (t, q)-series together with their conjectured product forms,
and a verification suite that checks all of it exhaustively at desk
scale.
"""

from .dyson import (
    FirstRowCol,
    InadmissibleCompositionError,
    StairReport,
    UndefinedMapError,
    build,
    decompose,
    first_row_col,
    format_composition,
    is_admissible,
    parse_composition,
    psi2,
    psi2_inv,
    rho1,
    rho1_inv,
    stair_report,
)
from .enumeration import compositions_12, fibonacci, partition_count, partitions_of
from .insertion import insert_rows, split_rows
from .partitions import (
    CellStat,
    WeightKind,
    boundary_sequence,
    cell_stats,
    cells,
    check_partition,
    conjugate,
    contributes_by_boundary,
    format_partition,
    has_short_descents,
    has_triple_columns,
    parse_partition,
    size,
    weight,
)
from .series import BiSeries, ProductKind, product_series, to_csv, to_json, to_table, weight_series
from .verify import (
    CHECKS,
    Counterexample,
    VerificationReport,
    verify_correction,
    verify_product,
    verify_structure,
    verify_top_coefficients,
    verify_transport,
)

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "CHECKS",
    "CellStat",
    "Counterexample",
    "FirstRowCol",
    "InadmissibleCompositionError",
    "ProductKind",
    "StairReport",
    "UndefinedMapError",
    "VerificationReport",
    "WeightKind",
    "boundary_sequence",
    "build",
    "cell_stats",
    "cells",
    "check_partition",
    "compositions_12",
    "conjugate",
    "contributes_by_boundary",
    "decompose",
    "fibonacci",
    "first_row_col",
    "format_composition",
    "format_partition",
    "has_short_descents",
    "has_triple_columns",
    "insert_rows",
    "is_admissible",
    "parse_composition",
    "parse_partition",
    "partition_count",
    "partitions_of",
    "product_series",
    "psi2",
    "psi2_inv",
    "rho1",
    "rho1_inv",
    "size",
    "split_rows",
    "stair_report",
    "to_csv",
    "to_json",
    "to_table",
    "verify_correction",
    "verify_product",
    "verify_structure",
    "verify_top_coefficients",
    "verify_transport",
    "weight",
    "weight_series",
]
