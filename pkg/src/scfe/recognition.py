"""Proper circular-arc recognition and model construction.

A proper model is described by a cyclic order ``sigma`` of arc starts plus a
*reach* ``E``: in lifted coordinates (position ``p + n`` is position ``p`` one
turn later) arc ``p`` covers the starts ``p, p+1, ..., E[p]``.  Two arcs
``p < q`` meet iff ``q <= E[p]`` or ``p + n <= E[q]``.

For a fixed ``sigma`` the largest admissible reach can be computed directly,
and ``sigma`` is realizable iff that reach covers every edge.  The search for
``sigma`` splits three ways:

* several components: each must be a proper interval graph, laid out by a
  consecutive-ones order of closed neighbourhoods;
* connected with a bipartite complement: the two cliques are ordered by a
  transitive orientation of the graph;
* otherwise: a circular-ones order of closed neighbourhoods.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .consecutive import circular_ones, consecutive_ones
from .errors import ConstructionError, PreconditionError
from .geometry import Arc, ArcModel, intersection_graph, is_proper_model
from .graph import PlainGraph
from .orientation import transitive_orientation

log = logging.getLogger(__name__)

Symbol = tuple[Literal["L", "R"], int]


@dataclass(frozen=True)
class EndpointWord:
    """Cyclic sequence of arc starts (``L``) and ends (``R``), each vertex once per kind."""

    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        syms = tuple((str(k), int(v)) for k, v in self.symbols)
        n = len(syms) // 2
        want = {(k, v) for k in "LR" for v in range(1, n + 1)}
        if len(syms) % 2 or set(syms) != want or len(set(syms)) != len(syms):
            raise PreconditionError("endpoint word must hold L_v and R_v exactly once for v = 1..n")
        object.__setattr__(self, "symbols", syms)
        if not self.same_cyclic_order():
            raise PreconditionError("start and end symbols follow different cyclic orders")

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    def _cycle(self, kind: str) -> list[int]:
        seq = [v for k, v in self.symbols if k == kind]
        if not seq:
            return seq
        i = seq.index(1)
        return seq[i:] + seq[:i]

    def same_cyclic_order(self) -> bool:
        return self._cycle("L") == self._cycle("R")

    def to_model(self) -> ArcModel:
        """Symbol ``t`` goes to angle ``t / (2n + 1)``; every arc is closed."""
        m = len(self.symbols) + 1
        at = {s: Fraction(t, m) for t, s in enumerate(self.symbols)}
        arcs = {}
        for v in range(1, self.n + 1):
            a, b = at[("L", v)], at[("R", v)]
            arcs[v] = Arc(a, (b - a) % 1)
        return ArcModel(arcs)


@dataclass(frozen=True)
class RecognitionResult:
    """A verified proper model, or a refusal when ``model`` is ``None``."""

    model: ArcModel | None
    order: tuple[int, ...] = ()
    reach: tuple[int, ...] = ()
    word: EndpointWord | None = None

    @property
    def accepted(self) -> bool:
        return self.model is not None

    def __bool__(self) -> bool:
        return self.accepted


def reach_limits(adj: dict[int, set[int]], sigma: Sequence[int]) -> list[int]:
    """For each position, the last lifted position of its run of consecutive neighbours."""
    n = len(sigma)
    out = []
    for p in range(n):
        nbrs = adj[sigma[p]]
        u = p + n - 1
        for m in range(1, n):
            if sigma[(p + m) % n] not in nbrs:
                u = p + m - 1
                break
        out.append(u)
    return out


def greatest_reach(limits: Sequence[int]) -> list[int]:
    """Largest non-decreasing lifted reach bounded by ``limits``."""
    n = len(limits)
    return [min(limits[(p + m) % n] + n * ((p + m) // n) for m in range(n)) for p in range(n)]


def covers_edges(adj: dict[int, set[int]], sigma: Sequence[int], reach: Sequence[int]) -> bool:
    n = len(sigma)
    for p in range(n):
        for q in range(p + 1, n):
            if sigma[q] in adj[sigma[p]] and not (q <= reach[p] or p + n <= reach[q]):
                return False
    return True


def word_from_order(sigma: Sequence[int], reach: Sequence[int]) -> EndpointWord:
    """Endpoint word realizing ``(sigma, reach)`` with every endpoint distinct.

    The end of arc ``p`` goes strictly between starts ``reach[p]`` and
    ``reach[p] + 1``; ties in reach are broken along ``sigma``, wrapping around.
    """
    n = len(sigma)

    def lifted(q: int) -> int:
        return reach[q % n] + n * (q // n)

    rank = []
    for p in range(n):
        k = 0
        while k < n - 1 and lifted(p - k - 1) == reach[p]:
            k += 1
        rank.append(k)
    points: list[tuple[Fraction, Symbol]] = []
    for p in range(n):
        points.append((Fraction(p), ("L", sigma[p])))
        r = reach[p] + Fraction(rank[p] + 1, n + 1)
        points.append((r % n, ("R", sigma[p])))
    points.sort()
    return EndpointWord(tuple(s for _, s in points))


def _components(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for root in sorted(adj):
        if root in seen:
            continue
        seen.add(root)
        comp, queue = [], deque([root])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _two_coloring(vertices: list[int], adj: dict[int, set[int]]) -> dict[int, int] | None:
    color: dict[int, int] = {}
    for root in vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def _closed(adj: dict[int, set[int]], v: int) -> set[int]:
    return adj[v] | {v}


def candidate_order(H: PlainGraph) -> tuple[list[int] | None, str]:
    """A start order worth testing, or ``None`` when the graph is certainly not proper circular-arc."""
    adj = H.adjacency()
    verts = list(H.vertices)
    comps = _components(adj)
    if len(comps) > 1:
        sigma: list[int] = []
        for comp in comps:
            part = consecutive_ones(comp, [_closed(adj, v) for v in comp])
            if part is None:
                return None, "components"
            sigma.extend(part)
        return sigma, "components"
    co = {v: set(verts) - adj[v] - {v} for v in verts}
    color = _two_coloring(verts, co)
    if color is not None:
        arcs = transitive_orientation(adj)
        if arcs is None:
            return None, "orientation"
        out = {v: 0 for v in verts}
        for a, b in arcs:
            if color[a] == color[b]:
                out[a] += 1
        sides = [[v for v in verts if color[v] == c] for c in (0, 1)]
        return [v for side in sides for v in sorted(side, key=lambda v: (-out[v], v))], "orientation"
    return circular_ones(verts, [_closed(adj, v) for v in verts]), "circular"


def proper_order(H: PlainGraph) -> tuple[list[int], list[int]] | None:
    """``(sigma, reach)`` of some proper model of ``H``, or ``None``."""
    if H.n == 0:
        return [], []
    sigma, route = candidate_order(H)
    if sigma is None:
        log.debug("no candidate start order (%s route)", route)
        return None
    adj = H.adjacency()
    reach = greatest_reach(reach_limits(adj, sigma))
    if not covers_edges(adj, sigma, reach):
        raise ConstructionError(f"{route} route produced an order that does not realize the graph")
    return sigma, reach


def verify_model(H: PlainGraph, M: ArcModel) -> bool:
    """Intersection graph equals ``H`` and no arc strictly contains another."""
    if M.n != H.n:
        raise PreconditionError(f"model has {M.n} arcs for a graph on {H.n} vertices")
    return intersection_graph(M) == H and is_proper_model(M)


def recognize_pca(H: PlainGraph) -> RecognitionResult:
    """Proper circular-arc model of ``H`` with all endpoints distinct, or a refusal."""
    found = proper_order(H)
    if found is None:
        return RecognitionResult(None)
    sigma, reach = found
    word = word_from_order(sigma, reach)
    model = word.to_model()
    if not verify_model(H, model):
        raise ConstructionError("recognized model failed verification")
    return RecognitionResult(model, tuple(sigma), tuple(reach), word)


def closed_twin_classes(H: PlainGraph) -> list[list[int]]:
    """Vertices grouped by closed neighbourhood, groups ordered by smallest member."""
    adj = H.adjacency()
    groups: dict[frozenset[int], list[int]] = {}
    for v in H.vertices:
        groups.setdefault(frozenset(_closed(adj, v)), []).append(v)
    return sorted(groups.values())
