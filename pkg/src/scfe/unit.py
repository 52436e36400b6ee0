"""Equal-length arc models in exact arithmetic.

Given a start order ``sigma`` and a reach ``E`` (see :mod:`scfe.recognition`),
arcs of common length ``delta`` with lifted starts ``s`` (``s[q + n] = s[q] + 1``)
realize it, up to the choice of open and closed ends, iff

* ``s[p] <= s[p+1]``,
* ``s[E[p]] - s[p] <= delta`` (arc ``p`` reaches start ``E[p]``),
* ``s[E[p]+1] - s[p] >= delta`` (and no further).

For fixed ``delta`` these are difference constraints.  A negative cycle tells
on which side of the current ``delta`` the feasible values lie, through the
sign of its total ``delta`` coefficient; every end of the feasible interval is
a fraction with denominator at most ``n``, so a binary search over such
fractions and their midpoints finds a feasible ``delta`` exactly.

Some equalities hold on the whole feasible set (forced touches, and even
forced coincident starts).  The point returned keeps exactly those: every
constraint that is not forced is made strict through a symbolic ``eps``, with
weights ``(value, eps multiplier)`` compared lexicographically.  Flags are
then chosen so that each remaining touch is an intersection precisely when
the graph wants an edge there.  Any other point has at least these touches,
so when no flags fit here none fit anywhere for this ``(sigma, E)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

Weight = tuple[Fraction, int]


@dataclass(frozen=True)
class _Edge:
    src: int
    dst: int
    const: int
    dcoef: int

    def value(self, delta: Fraction) -> Fraction:
        return self.const + self.dcoef * delta


@dataclass(frozen=True)
class UnitSolution:
    """Starts in ``[0, 1)`` (non-decreasing along the order), common length and end flags."""

    starts: tuple[Fraction, ...]
    delta: Fraction
    closed_start: tuple[bool, ...]
    closed_end: tuple[bool, ...]


def _constraints(reach: Sequence[int]) -> list[_Edge]:
    """Edges ``u -> v`` meaning ``s[v] <= s[u] + const + dcoef * delta``."""
    n = len(reach)
    edges = [_Edge(p + 1, p, 0, 0) for p in range(n - 1)]
    edges.append(_Edge(0, n - 1, 1, 0))
    for p, e in enumerate(reach):
        edges.append(_Edge(p, e % n, -(e // n), 1))
        f = e + 1
        edges.append(_Edge(f % n, p, f // n, -1))
    return edges


def _bellman_ford(n: int, edges: list[_Edge], weights: list[Weight]) -> tuple[list[Weight] | None, int]:
    """Potentials, or ``None`` with the ``delta`` coefficient of a negative cycle."""
    dist: list[Weight] = [(Fraction(0), 0)] * n
    pred: list[int] = [-1] * n
    changed = -1
    for _ in range(n + 1):
        changed = -1
        for idx, e in enumerate(edges):
            w = weights[idx]
            cand = (dist[e.src][0] + w[0], dist[e.src][1] + w[1])
            if cand < dist[e.dst]:
                dist[e.dst] = cand
                pred[e.dst] = idx
                changed = e.dst
        if changed < 0:
            return dist, 0
    v = changed
    for _ in range(n):
        v = edges[pred[v]].src
    start, total = v, 0
    while True:
        e = edges[pred[v]]
        total += e.dcoef
        v = e.src
        if v == start:
            return None, total


def _candidates(n: int) -> list[Fraction]:
    farey = {Fraction(a, b) for b in range(1, n + 1) for a in range(1, b + 1) if 2 * a <= b}
    pts = sorted(farey | {Fraction(0)})
    mids = {(x + y) / 2 for x, y in zip(pts, pts[1:])}
    return sorted(farey | mids)


def _probe(n: int, edges: list[_Edge], delta: Fraction) -> int:
    """0 if feasible, +1 if ``delta`` is too small, -1 if too large, 2 if never feasible."""
    dist, coef = _bellman_ford(n, edges, [(e.value(delta), 0) for e in edges])
    if dist is not None:
        return 0
    return (coef > 0) - (coef < 0) if coef else 2


def feasible_delta(reach: Sequence[int]) -> Fraction | None:
    """A common length strictly inside the feasible range when it has interior, or ``None``."""
    n = len(reach)
    edges = _constraints(reach)
    cands = _candidates(n)
    lo, hi, hit = 0, len(cands) - 1, None
    while lo <= hi:
        mid = (lo + hi) // 2
        verdict = _probe(n, edges, cands[mid])
        if verdict == 0:
            hit = mid
            break
        if verdict == 2:
            return None
        lo, hi = (mid + 1, hi) if verdict > 0 else (lo, mid - 1)
    if hit is None:
        return None
    first = last = hit
    lo, hi = 0, hit - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        if _probe(n, edges, cands[mid]) == 0:
            first, hi = mid, mid - 1
        else:
            lo = mid + 1
    lo, hi = hit + 1, len(cands) - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        if _probe(n, edges, cands[mid]) == 0:
            last, lo = mid, mid + 1
        else:
            hi = mid - 1
    if first == last:
        return cands[first]
    return (cands[first] + cands[last]) / 2


def _strongly_connected(n: int, arcs: list[tuple[int, int]]) -> list[int]:
    """Component id per vertex (Kosaraju)."""
    out: list[list[int]] = [[] for _ in range(n)]
    inc: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
        inc[v].append(u)
    seen = [False] * n
    finish: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, iter(out[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(out[w])))
                    break
            else:
                stack.pop()
                finish.append(v)
    comp = [-1] * n
    for root in reversed(finish):
        if comp[root] >= 0:
            continue
        comp[root] = root
        todo = [root]
        while todo:
            v = todo.pop()
            for w in inc[v]:
                if comp[w] < 0:
                    comp[w] = root
                    todo.append(w)
    return comp


def interior_starts(reach: Sequence[int], delta: Fraction) -> list[Fraction] | None:
    """Lifted starts satisfying every constraint, strictly unless it is forced."""
    n = len(reach)
    edges = _constraints(reach)
    vals = [e.value(delta) for e in edges]
    dist, _ = _bellman_ford(n, edges, [(v, 0) for v in vals])
    if dist is None:
        return None
    pot = [d for d, _ in dist]
    tight = [(e.src, e.dst) for e, v in zip(edges, vals) if v + pot[e.src] - pot[e.dst] == 0]
    comp = _strongly_connected(n, tight)
    forced = [
        v + pot[e.src] - pot[e.dst] == 0 and comp[e.src] == comp[e.dst] for e, v in zip(edges, vals)
    ]
    weights = [(v, 0 if f else -1) for v, f in zip(vals, forced)]
    dist, _ = _bellman_ford(n, edges, weights)
    assert dist is not None, "relaxing unforced constraints cannot create a negative cycle"
    eps = Fraction(1)
    for e, (wv, we) in zip(edges, weights):
        slack = dist[e.dst][0] - dist[e.src][0] - wv
        tilt = dist[e.dst][1] - dist[e.src][1] - we
        if slack < 0 < tilt:
            eps = min(eps, -slack / tilt)
    eps /= 2
    raw = [d + eps * m for d, m in dist]
    return [x - raw[0] for x in raw]


def choose_flags(
    starts: Sequence[Fraction], delta: Fraction, adjacent: Sequence[Sequence[bool]]
) -> tuple[list[bool], list[bool]] | None:
    """Closed-start and closed-end flags making touches agree with ``adjacent``, or ``None``.

    Flags are literals ``(kind, p)`` with kind 0 for a start and 1 for an end.
    A wanted touch needs both incident ends closed; an unwanted one needs at
    least one of them open, preferably the arc end.
    """
    n = len(starts)
    need: set[tuple[int, int]] = set()
    choices: list[list[tuple[tuple[int, int], tuple[int, int]]]] = []
    forbid: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for p in range(n):
        for q in range(p + 1, n):
            g = (starts[q] - starts[p]) % 1
            robust = g == 0 or g < delta or 1 - g < delta
            touches = []
            if g == delta:
                touches.append(((1, p), (0, q)))
            if g and 1 - g == delta:
                touches.append(((1, q), (0, p)))
            want = adjacent[p][q]
            if robust:
                if not want:
                    return None
                continue
            if want:
                if not touches:
                    return None
                if len(touches) == 1:
                    need.update(touches[0])
                else:
                    choices.append(touches)
            else:
                forbid.extend(touches)
    for picks in product(*choices):
        on = set(need)
        for a, b in picks:
            on.update((a, b))
        if any(a in on and b in on for a, b in forbid):
            continue
        closed = {(k, p): True for k in (0, 1) for p in range(n)}
        for a, b in forbid:
            if not (closed[a] and closed[b]):
                continue
            closed[a if a not in on else b] = False
        return [closed[(0, p)] for p in range(n)], [closed[(1, p)] for p in range(n)]
    return None


def solve_unit(reach: Sequence[int], adjacent: Sequence[Sequence[bool]]) -> UnitSolution | None:
    """Equal-length realization of ``reach`` agreeing with ``adjacent`` (indexed by order position)."""
    delta = feasible_delta(reach)
    if delta is None:
        return None
    lifted = interior_starts(reach, delta)
    if lifted is None:
        return None
    flags = choose_flags(lifted, delta, adjacent)
    if flags is None:
        return None
    return UnitSolution(tuple(x % 1 for x in lifted), delta, tuple(flags[0]), tuple(flags[1]))
