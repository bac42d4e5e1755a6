"""Continued-fraction expansions and boundary slopes of 2-bridge knots."""
from .cf import (
    ExpansionValue,
    InvalidKnotError,
    KnotParams,
    NotAnExpansionError,
    euclid_expansion,
    evaluate,
    evaluate_with_shift,
    even_expansion,
    is_knot_expansion,
    normalize_knot,
)
from .census import CensusRecord, canonical_representatives, census_record, run_census
from .oracle import enumerate_all_expansions, verify_bijection
from .slopes import (
    KnotSlopeReport,
    boundary_slope,
    collision_dp,
    connectedness_profile,
    has_repeated_slope,
    is_superincreasing,
    knot_report,
    sign_counts,
    signed_sum,
    slope_context,
)
from .subtuples import (
    EnumerationLimitError,
    NotAllowableError,
    dual,
    enumerate_allowable,
    expand,
    is_allowable,
    is_symmetric,
    reduce_expansion,
)

__version__ = "0.1.0"
