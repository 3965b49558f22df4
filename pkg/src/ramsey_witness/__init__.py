"""Exact matching-type invariants, graph families and witness extraction
for connected Ramsey-type theorems."""

from ._core import COMPILED
from .extraction import (
    ExtractionOutcome,
    SoundnessError,
    extract_independence_witness,
    extract_induced_matching_witness,
    extract_matching_witness,
    extract_path_clique_star,
    run_pipeline,
    verify_witness,
)
from .families import FamilySpec, Witness, contains_induced, generate
from .graph import Graph, Graph6Error, PreconditionError, parse_graph6, write_graph6
from .invariants import (
    fractional_matching_number,
    independence_number,
    induced_matching_number,
    maximum_matching,
    vertex_cover_number,
)

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "ExtractionOutcome",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "PreconditionError",
    "SoundnessError",
    "Witness",
    "contains_induced",
    "extract_independence_witness",
    "extract_induced_matching_witness",
    "extract_matching_witness",
    "extract_path_clique_star",
    "fractional_matching_number",
    "generate",
    "independence_number",
    "induced_matching_number",
    "maximum_matching",
    "parse_graph6",
    "run_pipeline",
    "verify_witness",
    "vertex_cover_number",
    "write_graph6",
]
