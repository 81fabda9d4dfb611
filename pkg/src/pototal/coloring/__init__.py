"""List total colouring: element calculus, gadget solver, extenders and the engine."""

from pototal.coloring.core import (
    ColoringError,
    GadgetTooLarge,
    HypothesisViolation,
    ListAssignment,
    NotColorable,
    NotReducible,
    UndersizedLists,
    available_list,
    format_lists,
    parse_lists,
    required_list_size,
    verify_total_coloring,
)
from pototal.coloring.engine import ColoringResult, color_list_total
from pototal.coloring.gadget import GadgetProblem, color_cycle_edges_2lists, solve_gadget

__all__ = [
    "ColoringError",
    "ColoringResult",
    "GadgetProblem",
    "GadgetTooLarge",
    "HypothesisViolation",
    "ListAssignment",
    "NotColorable",
    "NotReducible",
    "UndersizedLists",
    "available_list",
    "color_cycle_edges_2lists",
    "color_list_total",
    "format_lists",
    "parse_lists",
    "required_list_size",
    "solve_gadget",
    "verify_total_coloring",
]
