"""Signed graphs drawn on the circle so that every vertex sits closer to its friends than to its enemies."""

from .construction import (
    EqualLengthModel,
    almost_valid_to_valid,
    drawing_to_completion,
    drawing_to_model,
    equalize_lengths,
    model_to_almost_valid,
    perturb_step,
    repair_ties,
    unit_model,
    violating_vertices,
)
from .errors import (
    ConstructionError,
    DrawingError,
    GraphError,
    NoEqualLengthModel,
    ParseError,
    PreconditionError,
    ScfeError,
    SearchLimitError,
)
from .formats import parse_drawing, parse_graph, write_drawing, write_graph
from .generate import gen_instance
from .geometry import (
    Arc,
    ArcModel,
    Drawing,
    almost_valid_window,
    arcs_intersect,
    cyclic_labeling,
    distance,
    intersection_graph,
    is_proper_model,
    is_valid_drawing,
)
from .graph import Completion, PlainGraph, SignedGraph, apply_completion, missing_pairs, positive_subgraph
from .oracle import oracle_pca, oracle_word
from .recognition import EndpointWord, RecognitionResult, recognize_pca, verify_model
from .solver import SolveResult, VerifyReport, decide_complete, decide_general, verify
from .svg import render_svg

