"""Exact computations around the integer hull of {(x, y) : xy >= N}."""

from .area_engine import AreaResult, edge_cap_area, missed_area_Q, missed_area_range, pick_counts, shoelace_area2
from .cap_analysis import cap_from_edge, cap_is_empty, cap_lattice_width, lattice_width, minkowski_body_area
from .hull_chain import chain_vertices, f0_H, f0_Q, hull_params, prefix_vertices, q_polygon, validate_strip
from .lattice_core import LatticePoint, OverflowBoundError, ceil_div, gcd, is_primitive, orient
from .number_theory import divisor_count, divisor_summatory, primitive_pair_count, strip_count

__all__ = [
    "AreaResult", "LatticePoint", "OverflowBoundError",
    "cap_from_edge", "cap_is_empty", "cap_lattice_width", "ceil_div", "chain_vertices",
    "divisor_count", "divisor_summatory", "edge_cap_area", "f0_H", "f0_Q", "gcd", "hull_params",
    "is_primitive", "lattice_width", "minkowski_body_area", "missed_area_Q", "missed_area_range",
    "orient", "pick_counts", "prefix_vertices", "primitive_pair_count", "q_polygon",
    "shoelace_area2", "strip_count", "validate_strip",
]
