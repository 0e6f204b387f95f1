"""Majority edge-colourings of hypergraphs (C++ core via pybind11)."""

from ._core import (
    Hypergraph,
    InvariantBreach,
    SearchTooLarge,
    PreconditionError,
    ParseError,
    McolourError,
    alpha,
    bad_vertices,
    brute_force,
    colour_linear,
    colour_partition,
    complete_graph,
    format_hypergraph,
    generate,
    inequalities_hold,
    parse_hypergraph,
    random_colouring,
    resample_colour,
    round_weights,
    run_cli,
    split_degrees,
    threshold,
    threshold_terms,
    verify,
)

__all__ = [
    "Hypergraph",
    "InvariantBreach",
    "SearchTooLarge",
    "PreconditionError",
    "ParseError",
    "McolourError",
    "alpha",
    "bad_vertices",
    "brute_force",
    "colour_linear",
    "colour_partition",
    "complete_graph",
    "format_hypergraph",
    "generate",
    "inequalities_hold",
    "parse_hypergraph",
    "random_colouring",
    "resample_colour",
    "round_weights",
    "run_cli",
    "split_degrees",
    "threshold",
    "threshold_terms",
    "verify",
]
