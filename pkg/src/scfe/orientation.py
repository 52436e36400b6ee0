"""Transitive orientation by repeated removal of implication classes."""

from __future__ import annotations

from collections import deque
from typing import Hashable, Mapping, TypeVar

V = TypeVar("V", bound=Hashable)


def transitive_orientation(adj: Mapping[V, set[V]]) -> set[tuple[V, V]] | None:
    """Arcs of a transitive orientation of the graph, or ``None`` if there is none.

    Edge ``ab`` forces ``ab'`` when ``bb'`` is not an edge, and ``a'b`` when
    ``aa'`` is not.  Classes are computed in the graph left after removing the
    classes already fixed, which is what makes the union transitive.
    """
    live: dict[V, set[V]] = {v: set(ns) for v, ns in adj.items()}
    order = {v: i for i, v in enumerate(sorted(adj, key=repr))}
    arcs: set[tuple[V, V]] = set()
    while True:
        start = min(
            ((a, b) for a in live for b in live[a] if order[a] < order[b]),
            key=lambda e: (order[e[0]], order[e[1]]),
            default=None,
        )
        if start is None:
            break
        cls = {start}
        queue = deque([start])
        while queue:
            a, b = queue.popleft()
            forced = [(a, c) for c in live[a] if c != b and c not in live[b]]
            forced += [(c, b) for c in live[b] if c != a and c not in live[a]]
            for e in forced:
                if e not in cls:
                    cls.add(e)
                    queue.append(e)
        if any((b, a) in cls for a, b in cls):
            return None
        arcs |= cls
        for a, b in cls:
            live[a].discard(b)
            live[b].discard(a)
    succ: dict[V, set[V]] = {v: set() for v in adj}
    for a, b in arcs:
        succ[a].add(b)
    for a, b in arcs:
        if not succ[b] <= succ[a]:
            raise AssertionError("implication classes produced a non-transitive orientation")
    return arcs
