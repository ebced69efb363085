"""Exact counts of n-vertex connected components of the degree-3 tree.

Counts come in two solved families, both expressible as fixed linear
combinations of Catalan numbers:

* ``full_count_*``: components containing a fixed full component with m
  boundary vertices,
* ``path_count_*``: components containing the two endpoints of a fixed
  m-vertex shortest path.

Every count is exact (arbitrary precision); a brute-force enumeration
oracle cross-checks the formulas on small instances.
"""

from ._core import (
    canonical_full_component,
    canonical_path,
    catalan,
    catalan_asymptotic,
    catalan_table,
    classify,
    count_components_oracle,
    floor_m,
    full_asymptotic,
    full_count_closed,
    full_count_convolution,
    gen_vector_full,
    gen_vector_path,
    gen_vector_path_additive,
    is_full_by_count,
    kernel_check,
    minimal_component,
    minimal_full_component,
    neighbors,
    path_asymptotic,
    path_count_closed,
    path_count_convolution,
    path_count_recurrence,
    shape_independence_check,
    shortest_path,
    verify_family,
)

__all__ = [
    "canonical_full_component",
    "canonical_path",
    "catalan",
    "catalan_asymptotic",
    "catalan_table",
    "classify",
    "count_components_oracle",
    "floor_m",
    "full_asymptotic",
    "full_count_closed",
    "full_count_convolution",
    "gen_vector_full",
    "gen_vector_path",
    "gen_vector_path_additive",
    "is_full_by_count",
    "kernel_check",
    "minimal_component",
    "minimal_full_component",
    "neighbors",
    "path_asymptotic",
    "path_count_closed",
    "path_count_convolution",
    "path_count_recurrence",
    "shape_independence_check",
    "shortest_path",
    "verify_family",
]

__version__ = "1.0.0"
