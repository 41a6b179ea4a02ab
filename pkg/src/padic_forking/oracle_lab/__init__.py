"""Brute-force oracles and the named property suites built on them."""

from .oracles import (
    ENUMERATION_LIMIT,
    general_linear_group,
    oracle_dist,
    oracle_dist_generators,
    oracle_orbit_same,
    oracle_type_distance,
    realizations,
    span_set,
)
from .suites import (
    ENUMERATION_CONTEXTS,
    GEOMETRY_CONTEXTS,
    SAMPLED_CONTEXTS,
    PropertyConfig,
    SuiteReport,
    render_report,
    run_all,
    run_suite,
    suite_names,
)

__all__ = [
    "ENUMERATION_CONTEXTS",
    "ENUMERATION_LIMIT",
    "GEOMETRY_CONTEXTS",
    "SAMPLED_CONTEXTS",
    "PropertyConfig",
    "SuiteReport",
    "general_linear_group",
    "oracle_dist",
    "oracle_dist_generators",
    "oracle_orbit_same",
    "oracle_type_distance",
    "realizations",
    "render_report",
    "run_all",
    "run_suite",
    "span_set",
    "suite_names",
]
