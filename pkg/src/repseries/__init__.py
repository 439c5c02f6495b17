"""Exact Poincare series of spaces of commuting elements in compact Lie groups,
computed from Weyl group class data."""
from .classes import (
    CapExceeded,
    ClassRecord,
    ClassTable,
    UnsupportedFactor,
    class_table,
    combinatorial_class_table,
    enumerate_class_table,
)
from .exactpoly import (
    BiPoly,
    NotInvertible,
    TruncatedSeries,
    UniPoly,
    VariableMismatch,
    bipoly_collapse,
    poly_eval,
    poly_mul,
    poly_pow,
    series_inverse,
)
from .groups import (
    CartanFactor,
    DegreeTable,
    GroupSpec,
    ParseError,
    WeylElement,
    degrees,
    parse_group,
    reflection_generators,
)
from .series import (
    SeriesResult,
    TruncationInsufficient,
    comm_hilbert_series,
    comm_series,
    euler_characteristic,
    hom_series,
    rep_hilbert_series,
    rep_series,
    smash_series,
    xq_hilbert_series,
    xq_series,
)

__version__ = "0.1.0"
