"""End-to-end decision and construction.

A complete signed graph is drawable exactly when its positive part is a
proper circular-arc graph.  An incomplete one is drawable when some sign
choice for its missing pairs makes it so; the search tries them all in a
fixed order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Literal

from .construction import (
    EqualLengthModel,
    RepairTrace,
    equalize_lengths,
    model_to_almost_valid,
    repair_ties,
)
from .direct import margin_drawing
from .errors import ConstructionError, NoEqualLengthModel, PreconditionError, SearchLimitError
from .geometry import ArcModel, Drawing, almost_valid_window, is_valid_drawing
from .graph import Completion, SignedGraph, apply_completion, missing_pairs, positive_subgraph
from .recognition import RecognitionResult, proper_order, recognize_pca

log = logging.getLogger(__name__)

DEFAULT_MAX_K = 25

Status = Literal["drawable", "not-drawable"]
Route = Literal["equal-length", "margin", "trivial"]


@dataclass(frozen=True)
class SolveResult:
    """Decision plus, when drawable, every artifact of the construction.

    ``route`` says how the drawing was obtained: through a common-length arc
    model and tie repair, through the margin LP when no common-length model
    exists, or trivially when no vertex has both a friend and an enemy.
    """

    status: Status
    examined: int
    refuted: int
    completion: Completion | None = None
    proper_model: ArcModel | None = None
    equal_length: EqualLengthModel | None = None
    drawing: Drawing | None = None
    route: Route | None = None
    repair: RepairTrace | None = None
    drawable_completions: int | None = None

    @property
    def drawable(self) -> bool:
        return self.status == "drawable"


@dataclass(frozen=True)
class _Built:
    model: ArcModel | None
    equal_length: EqualLengthModel | None
    drawing: Drawing
    route: Route
    repair: RepairTrace | None


def _build(CG: SignedGraph, rec: RecognitionResult) -> _Built:
    pos, neg = CG.neighbor_sets()
    if not any(pos[v] and neg[v] for v in CG.vertices):
        return _Built(rec.model, None, Drawing.regular(CG.n), "trivial", None)
    assert rec.model is not None
    try:
        meq = equalize_lengths(rec.model)
    except NoEqualLengthModel as exc:
        log.info("falling back to per-vertex thresholds: %s", exc)
        return _Built(rec.model, None, margin_drawing(CG, rec.order, rec.reach), "margin", None)
    start, delta = model_to_almost_valid(meq, CG)
    trace = repair_ties(CG, start, delta)
    return _Built(rec.model, meq, trace.result, "equal-length", trace)


def _finish(
    G: SignedGraph,
    CG: SignedGraph,
    C: Completion,
    examined: int,
    refuted: int,
    drawable_completions: int | None = None,
) -> SolveResult:
    rec = recognize_pca(positive_subgraph(CG))
    if not rec:
        raise ConstructionError("recognition refused a completion the search accepted")
    built = _build(CG, rec)
    if not is_valid_drawing(G, built.drawing):
        raise ConstructionError("constructed drawing is not valid for the input graph")
    return SolveResult(
        "drawable",
        examined,
        refuted,
        completion=C,
        proper_model=built.model,
        equal_length=built.equal_length,
        drawing=built.drawing,
        route=built.route,
        repair=built.repair,
        drawable_completions=drawable_completions,
    )


def decide_complete(G: SignedGraph) -> SolveResult:
    """Recognize the positive part; on success build and verify a drawing."""
    if not G.is_complete:
        raise PreconditionError(f"signed graph has {G.k} missing pairs")
    if proper_order(positive_subgraph(G)) is None:
        return SolveResult("not-drawable", examined=1, refuted=1)
    return _finish(G, G, Completion({}), examined=1, refuted=0)


def decide_general(G: SignedGraph, max_k: int = DEFAULT_MAX_K, exhaustive: bool = False) -> SolveResult:
    """Try completions in lexicographic order over missing pairs, ``+`` first.

    The first drawable completion is the witness.  With ``exhaustive`` every
    completion is examined and the drawable ones are counted.
    """
    k = G.k
    if k > max_k:
        raise SearchLimitError(f"{k} missing pairs exceed the ceiling of {max_k}")
    if k == 0 and not exhaustive:
        return decide_complete(G)
    pairs = missing_pairs(G)
    examined = refuted = hits = 0
    witness: tuple[Completion, SignedGraph] | None = None
    for signs in product("+-", repeat=k):
        examined += 1
        C = Completion.from_signs(pairs, signs)
        CG = apply_completion(G, C)
        if proper_order(positive_subgraph(CG)) is None:
            refuted += 1
            continue
        hits += 1
        if witness is None:
            witness = (C, CG)
        if not exhaustive:
            break
    count = hits if exhaustive else None
    if witness is None:
        return SolveResult("not-drawable", examined, refuted, drawable_completions=count)
    C, CG = witness
    return _finish(G, CG, C, examined, refuted, count)


@dataclass(frozen=True)
class VerifyReport:
    """Validity, the almost-valid window (if any), and every violating triple."""

    valid: bool
    window: tuple[Fraction, Fraction] | None
    violations: tuple[tuple[int, int, int], ...]

    def lines(self) -> list[str]:
        out = [f"valid: {'yes' if self.valid else 'no'}"]
        if self.window is None:
            out.append("window: none")
        else:
            out.append(f"window: [{self.window[0]}, {self.window[1]}]")
        out.extend(f"violation: vertex {i} friend {j} enemy {k}" for i, j, k in self.violations)
        return out


def verify(G: SignedGraph, D: Drawing) -> VerifyReport:
    """Check ``D`` against ``G``; a drawing missing vertices raises :class:`DrawingError`."""
    result = is_valid_drawing(G, D)
    return VerifyReport(result.ok, almost_valid_window(G, D), result.violations)
