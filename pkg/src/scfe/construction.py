"""From proper models to valid drawings and back.

Forward: equalize arc lengths, read each vertex off the clockwise end of its
arc (friends land within the common length ``delta``, enemies at least that
far), then nudge vertices that tie a friend and an enemy at exactly ``delta``.
Reverse: a valid drawing fixes a completion, and arcs spanning halfway to the
farthest friend on each side form a proper model of its positive part.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, islice, permutations
from typing import Iterator, Literal, Mapping, Sequence

from .errors import ConstructionError, DrawingError, NoEqualLengthModel, PreconditionError
from .geometry import (
    HALF,
    Arc,
    ArcModel,
    Drawing,
    almost_valid_window,
    arcs_intersect,
    constrained_distances,
    cyclic_labeling,
    distance,
    in_right_half,
    intersection_graph,
    is_valid_drawing,
    min_gap,
)
from .graph import Completion, PlainGraph, SignedGraph, missing_pairs, positive_subgraph
from .recognition import (
    closed_twin_classes,
    covers_edges,
    proper_order,
    reach_limits,
    verify_model,
)
from .unit import solve_unit

log = logging.getLogger(__name__)

Side = Literal["left", "right"]


# ---------------------------------------------------------------- equal lengths


@dataclass(frozen=True)
class EqualLengthModel:
    """Arc model whose arcs all have length ``delta``."""

    model: ArcModel
    delta: Fraction

    def __post_init__(self) -> None:
        delta = Fraction(self.delta)
        object.__setattr__(self, "delta", delta)
        if not 0 < delta < 1:
            raise PreconditionError(f"common length {delta} outside (0, 1)")
        odd = [v for v, a in self.model.arcs.items() if a.length != delta]
        if odd:
            raise PreconditionError(f"arcs {odd} do not have length {delta}")

    @property
    def n(self) -> int:
        return self.model.n


def _unit_twin_free(Q: PlainGraph) -> tuple[list[Fraction], Fraction, list[bool], list[bool]]:
    """Starts, common length and closed-start / closed-end flags for a twin-free proper circular-arc graph."""
    found = proper_order(Q)
    if found is None:
        raise PreconditionError("graph is not a proper circular-arc graph")
    sigma, _ = found
    n = Q.n
    adj = Q.adjacency()
    for order in (sigma, sigma[::-1]):
        limits = reach_limits(adj, order)
        universal = [p for p in range(n) if len(adj[order[p]]) == n - 1]
        options: list[list[int]] = [list(limits)]
        if universal:
            (p,) = universal
            options = []
            for e in range(p, limits[p] + 1):
                cand = list(limits)
                cand[p] = e
                options.append(cand)
        wanted = [[order[q] in adj[order[p]] for q in range(n)] for p in range(n)]
        for reach in options:
            if not _monotone(reach) or not covers_edges(adj, order, reach):
                continue
            sol = solve_unit(reach, wanted)
            if sol is None:
                continue
            starts = [Fraction(0)] * (n + 1)
            cs = [True] * (n + 1)
            ce = [True] * (n + 1)
            for p, v in enumerate(order):
                starts[v] = sol.starts[p]
                cs[v] = sol.closed_start[p]
                ce[v] = sol.closed_end[p]
            return starts, sol.delta, cs, ce
        log.debug("no equal-length realization for order %s; trying its reversal", order)
    raise NoEqualLengthModel(f"no common-length model for the order {sigma} or its reversal")


def _monotone(reach: Sequence[int]) -> bool:
    n = len(reach)
    return all(reach[p] <= reach[p + 1] for p in range(n - 1)) and reach[-1] <= reach[0] + n


def unit_model(H: PlainGraph) -> EqualLengthModel:
    """Equal-length model of a proper circular-arc graph.

    Closed twins receive identical arcs.  Other arcs may still share a start
    when the graph forces it; their open and closed ends tell them apart.
    """
    if H.n == 0:
        return EqualLengthModel(ArcModel({}), HALF)
    classes = closed_twin_classes(H)
    reps = [c[0] for c in classes]
    Q, _ = H.induced(reps)
    if Q.n == 1:
        starts, delta, cs, ce = [Fraction(0)] * 2, HALF, [True] * 2, [True] * 2
    else:
        starts, delta, cs, ce = _unit_twin_free(Q)
    arcs = {}
    for qi, cls in enumerate(classes, start=1):
        for v in cls:
            arcs[v] = Arc(starts[qi], delta, cs[qi], ce[qi])
    out = EqualLengthModel(ArcModel(arcs), delta)
    if not verify_model(H, out.model):
        raise ConstructionError("equal-length model does not reproduce the graph")
    return out


def equalize_lengths(M: ArcModel) -> EqualLengthModel:
    """Equal-length model with the same intersection graph as the proper model ``M``."""
    H = intersection_graph(M)
    if not verify_model(H, M):
        raise PreconditionError("input model is not proper")
    lengths = {a.length for a in M.arcs.values()}
    if len(lengths) == 1:
        return EqualLengthModel(M, lengths.pop())
    out = unit_model(H)
    if intersection_graph(out.model) != H:
        raise ConstructionError("equalization changed the intersection graph")
    return out


# ------------------------------------------------------------ forward direction


def model_to_almost_valid(Meq: EqualLengthModel, G: SignedGraph) -> tuple[Drawing, Fraction]:
    """Place each vertex at the clockwise end of its arc.

    Arcs sharing a start share an end, so those vertices would collide.  Each
    vertex ``v`` is then moved by ``eta * t[v]`` for small integers ``t``:
    members of a colliding group get distinct offsets, and any pair sitting at
    exactly ``delta`` keeps friends within ``delta`` and enemies outside it.
    These are difference constraints on ``t``.
    """
    if not G.is_complete:
        raise PreconditionError("signed graph must be complete")
    if Meq.n != G.n or intersection_graph(Meq.model) != positive_subgraph(G):
        raise PreconditionError("model does not realize the positive part")
    delta = Meq.delta
    ends = {v: a.end for v, a in Meq.model.arcs.items()}
    groups: dict[Fraction, list[int]] = {}
    for v, x in sorted(ends.items()):
        groups.setdefault(x, []).append(v)
    crowded = [g for g in groups.values() if len(g) > 1]
    if crowded:
        offsets = _spread_offsets(G, ends, delta, crowded)
        if offsets is None:
            raise ConstructionError(f"cannot separate coinciding vertices {crowded}")
        spread = max(offsets.values())
        slack = [abs(distance(x, y) - delta) for x, y in _pairs(ends)]
        room = min([min_gap(set(ends.values()))] + [d for d in slack if d])
        eta = room / (4 * (spread + 1))
        ends = {v: x + eta * offsets[v] for v, x in ends.items()}
    D = Drawing(ends)
    window = almost_valid_window(G, D)
    if window is None or not window[0] <= delta <= window[1]:
        raise ConstructionError(f"clockwise ends are not almost valid at {delta}")
    return D, delta


def _pairs(ends: Mapping[int, Fraction]) -> list[tuple[Fraction, Fraction]]:
    xs = list(ends.values())
    return [(xs[i], xs[j]) for i in range(len(xs)) for j in range(i + 1, len(xs))]


def _spread_offsets(
    G: SignedGraph, ends: Mapping[int, Fraction], delta: Fraction, crowded: list[list[int]]
) -> dict[int, int] | None:
    """Non-negative integer offsets, or ``None`` when no tried group order works."""
    pos, neg = G.neighbor_sets()
    bound = {v for v in G.vertices if pos[v] and neg[v]}
    base: list[tuple[int, int, int]] = []  # (u, v, w): t[v] - t[u] <= w

    for i in G.vertices:
        for j in G.vertices:
            if i >= j or not ({i, j} & bound):
                continue
            if distance(ends[i], ends[j]) != delta:
                continue
            friend = j in pos[i]
            if delta == HALF:
                if not friend:
                    base += [(i, j, 0), (j, i, 0)]
                continue
            ahead, behind = (i, j) if (ends[j] - ends[i]) % 1 == delta else (j, i)
            # distance becomes delta + eta * (t[behind] - t[ahead])
            base.append((ahead, behind, 0) if friend else (behind, ahead, 0))

    hint = _difference_solve(G.n, base)
    if hint is None:
        return None
    guesses = [
        [sorted(g, key=lambda v: (hint[v], v)) for g in crowded],
        [sorted(g, key=lambda v: (-hint[v], v)) for g in crowded],
    ]
    for combo in chain(guesses, islice(_orderings(crowded), 256)):
        cons = list(base)
        for members in combo:
            cons += [(members[k + 1], members[k], -1) for k in range(len(members) - 1)]
        t = _difference_solve(G.n, cons)
        if t is not None:
            low = min(t.values())
            return {v: x - low for v, x in t.items()}
    return None


def _orderings(groups: list[list[int]]) -> Iterator[list[tuple[int, ...]]]:
    """Every choice of one ordering per group, generated lazily."""
    if not groups:
        yield []
        return
    for head in permutations(groups[0]):
        for rest in _orderings(groups[1:]):
            yield [head, *rest]


def _difference_solve(n: int, cons: list[tuple[int, int, int]]) -> dict[int, int] | None:
    dist = {v: 0 for v in range(1, n + 1)}
    for _ in range(n + 1):
        changed = False
        for u, v, w in cons:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            return dist
    return None


@dataclass(frozen=True)
class Witnesses:
    """Farthest friends and closest enemies of a vertex on each half-circle."""

    left_friend: int | None
    right_friend: int | None
    left_enemy: int | None
    right_enemy: int | None
    pattern: Side | None = None


@dataclass(frozen=True)
class ViolationProfile:
    """Vertices tying a friend and an enemy at exactly ``delta``."""

    delta: Fraction
    witnesses: Mapping[int, Witnesses] = field(default_factory=dict)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)


def _side(p: Fraction, q: Fraction) -> Side:
    """Half of ``p`` holding ``q``; the antipode counts as right."""
    return "right" if in_right_half(p, q) else "left"


def _extreme(D: Drawing, a: int, group: set[int], side: Side, far: bool) -> int | None:
    pa = D[a]
    pool = [(distance(pa, D[j]), j) for j in group if _side(pa, D[j]) == side]
    if not pool:
        return None
    if far:
        best = max(d for d, _ in pool)
    else:
        best = min(d for d, _ in pool)
    return min(j for d, j in pool if d == best)


def _check_window(G: SignedGraph, D: Drawing, delta: Fraction) -> None:
    near, far = constrained_distances(G, D)
    if any(d > delta for d in near) or any(d < delta for d in far):
        raise PreconditionError(f"threshold {delta} is outside the almost-valid window")


def violating_vertices(G: SignedGraph, D: Drawing, delta: Fraction) -> ViolationProfile:
    """Tied vertices and their four witnesses."""
    _check_window(G, D, delta)
    pos, neg = G.neighbor_sets()
    found: dict[int, Witnesses] = {}
    for a in G.vertices:
        pa = D[a]
        tied_f = {_side(pa, D[j]) for j in pos[a] if distance(pa, D[j]) == delta}
        tied_e = {_side(pa, D[k]) for k in neg[a] if distance(pa, D[k]) == delta}
        if not tied_f or not tied_e:
            continue
        pattern: Side = "right" if "right" in tied_f and "left" in tied_e else "left"
        found[a] = Witnesses(
            _extreme(D, a, pos[a], "left", True),
            _extreme(D, a, pos[a], "right", True),
            _extreme(D, a, neg[a], "left", False),
            _extreme(D, a, neg[a], "right", False),
            pattern,
        )
    return ViolationProfile(delta, found)


def perturb_step(G: SignedGraph, D: Drawing, delta: Fraction, a: int) -> Drawing:
    """Move tied vertex ``a`` by a quarter of the smallest gap, toward its tied friend."""
    profile = violating_vertices(G, D, delta)
    if a not in profile.witnesses:
        raise PreconditionError(f"vertex {a} has no tie at {delta}")
    eps = min_gap(D.positions.values()) / 4
    sign = 1 if profile.witnesses[a].pattern == "right" else -1
    return D.moved(a, D[a] + sign * eps)


@dataclass(frozen=True)
class RepairTrace:
    """Every drawing visited while removing ties, plus the vertex moved at each step."""

    delta: Fraction
    drawings: tuple[Drawing, ...]
    moved: tuple[int, ...]
    initial_ties: int

    @property
    def result(self) -> Drawing:
        return self.drawings[-1]

    @property
    def steps(self) -> int:
        return len(self.moved)


def repair_ties(G: SignedGraph, D: Drawing, delta: Fraction | None = None) -> RepairTrace:
    """Remove all ties one vertex at a time, lowest cyclic label first."""
    window = almost_valid_window(G, D)
    if window is None:
        raise PreconditionError("drawing is not almost valid")
    if delta is None:
        delta = window[0]
    label = {v: i for i, v in enumerate(cyclic_labeling(D))}
    profile = violating_vertices(G, D, delta)
    initial = len(profile)
    drawings, moved = [D], []
    while len(profile):
        if len(moved) > initial:
            raise ConstructionError("tie repair did not terminate within its bound")
        a = min(profile.vertices, key=label.__getitem__)
        D = perturb_step(G, D, delta, a)
        drawings.append(D)
        moved.append(a)
        profile = violating_vertices(G, D, delta)
    if not is_valid_drawing(G, D):
        raise ConstructionError("tie repair ended on an invalid drawing")
    return RepairTrace(delta, tuple(drawings), tuple(moved), initial)


def almost_valid_to_valid(G: SignedGraph, D: Drawing, delta: Fraction | None = None) -> Drawing:
    """Valid drawing obtained from an almost-valid one; ``delta`` defaults to the window's low end."""
    return repair_ties(G, D, delta).result


# ------------------------------------------------------------ reverse direction


def _reach_side(D: Drawing, i: int, friends: set[int], side: Side) -> int:
    """Farthest friend of ``i`` on one half; ``i`` itself counts as a friend.

    A friend exactly opposite is assigned to the right half of whichever of
    the two points has the smaller angle, so both arcs grow toward each other.
    """
    pi = D[i]
    best, best_d = i, Fraction(0)
    for j in sorted(friends):
        d = distance(pi, D[j])
        if d == HALF:
            where: Side = "right" if pi < D[j] else "left"
        else:
            where = _side(pi, D[j])
        if where == side and d > best_d:
            best, best_d = j, d
    return best


def _require_valid(G: SignedGraph, D: Drawing) -> None:
    try:
        ok = is_valid_drawing(G, D)
    except DrawingError as exc:
        raise PreconditionError(str(exc)) from exc
    if not ok:
        raise PreconditionError(f"drawing is not valid: {ok.violations[:5]}")


def _between(D: Drawing, i: int, j: int, far: int, side: Side) -> bool:
    """Whether ``j`` lies strictly between ``i`` and ``far`` on the given side."""
    if far == i:
        return False
    if side == "right":
        return 0 < (D[j] - D[i]) % 1 < (D[far] - D[i]) % 1
    return 0 < (D[i] - D[j]) % 1 < (D[i] - D[far]) % 1


def drawing_to_completion(G: SignedGraph, D: Drawing) -> Completion:
    """Missing pairs lying inside some vertex's friend span become positive, the rest negative."""
    _require_valid(G, D)
    pos, _ = G.neighbor_sets()
    span = {i: (_reach_side(D, i, pos[i], "left"), _reach_side(D, i, pos[i], "right")) for i in G.vertices}
    signs = {}
    for i, j in missing_pairs(G):
        inside = any(
            _between(D, x, y, span[x][0], "left") or _between(D, x, y, span[x][1], "right")
            for x, y in ((i, j), (j, i))
        )
        signs[(i, j)] = "+" if inside else "-"
    return Completion(signs)


def drawing_to_model(CG: SignedGraph, D: Drawing) -> ArcModel:
    """Arcs from the midpoint toward the farthest left friend to the midpoint toward the farthest right one.

    A vertex without friends gets a short arc around itself.
    """
    if not CG.is_complete:
        raise PreconditionError("signed graph must be complete")
    _require_valid(CG, D)
    pos, _ = CG.neighbor_sets()
    pad = min_gap(D.positions.values()) / 8
    arcs = {}
    for i in CG.vertices:
        left = _reach_side(D, i, pos[i], "left")
        right = _reach_side(D, i, pos[i], "right")
        back = distance(D[i], D[left]) / 2
        ahead = distance(D[i], D[right]) / 2
        if back == ahead == 0:
            back = ahead = pad
        arcs[i] = Arc(D[i] - back, back + ahead)
    M = ArcModel(arcs)
    if not verify_model(positive_subgraph(CG), M):
        raise ConstructionError("midpoint arcs do not form a proper model of the positive part")
    return M


def same_cyclic_order(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two sequences agree up to rotation."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    k = list(b).index(a[0]) if a[0] in b else -1
    return k >= 0 and list(b[k:]) + list(b[:k]) == list(a)


def pairwise_intersections_match(H: PlainGraph, M: ArcModel) -> bool:
    """Explicit pair-by-pair comparison of ``H`` with the arcs of ``M``."""
    return all(
        arcs_intersect(M[i], M[j]) == H.has_edge(i, j)
        for i in H.vertices
        for j in H.vertices
        if i < j
    )
