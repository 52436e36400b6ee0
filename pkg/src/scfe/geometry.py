"""Exact circle arithmetic.

Angles are :class:`fractions.Fraction` values measured in turns and kept in
``[0, 1)``; one turn is a full revolution.  Nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DrawingError, GraphError
from .graph import PlainGraph, SignedGraph

Angle = Fraction
HALF = Fraction(1, 2)


def turn(x: Rational | int | str) -> Fraction:
    """Exact angle in ``[0, 1)``.  Floats are refused on purpose."""
    if isinstance(x, float):
        raise TypeError("angles must be exact; pass a Fraction, int or 'p/q' string")
    return Fraction(x) % 1


def distance(p: Fraction, q: Fraction) -> Fraction:
    """Length of the shorter arc between ``p`` and ``q``."""
    t = (p - q) % 1
    return min(t, 1 - t) if t else Fraction(0)


def in_right_half(p: Fraction, q: Fraction) -> bool:
    """Whether ``q`` lies within half a turn clockwise of ``p`` (antipode included)."""
    return (q - p) % 1 <= HALF


def in_left_half(p: Fraction, q: Fraction) -> bool:
    return (p - q) % 1 <= HALF


@dataclass(frozen=True)
class Drawing:
    """Injective placement of vertices on the circle."""

    positions: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        pos = {int(v): turn(a) for v, a in self.positions.items()}
        if len(set(pos.values())) != len(pos):
            seen: dict[Fraction, int] = {}
            for v, a in sorted(pos.items()):
                if a in seen:
                    raise DrawingError(f"vertices {seen[a]} and {v} share angle {a}")
                seen[a] = v
        object.__setattr__(self, "positions", MappingProxyType(dict(sorted(pos.items()))))

    def __getitem__(self, v: int) -> Fraction:
        return self.positions[v]

    def __len__(self) -> int:
        return len(self.positions)

    def require_total(self, n: int) -> None:
        if set(self.positions) != set(range(1, n + 1)):
            lacking = sorted(set(range(1, n + 1)) - set(self.positions))
            extra = sorted(set(self.positions) - set(range(1, n + 1)))
            raise DrawingError(f"drawing not total on 1..{n}: missing {lacking}, extra {extra}")

    def moved(self, v: int, to: Fraction) -> Drawing:
        pos = dict(self.positions)
        pos[v] = to
        return Drawing(pos)

    @classmethod
    def regular(cls, n: int) -> Drawing:
        """Vertex ``i`` at ``(i - 1) / n``."""
        return cls({i: Fraction(i - 1, n) for i in range(1, n + 1)})


@dataclass(frozen=True)
class Arc:
    """Arc running clockwise from ``start`` for ``length`` turns."""

    start: Fraction
    length: Fraction
    closed_start: bool = True
    closed_end: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", turn(self.start))
        length = Fraction(self.length)
        if not 0 < length < 1:
            raise GraphError(f"arc length {length} outside (0, 1)")
        object.__setattr__(self, "length", length)

    @property
    def end(self) -> Fraction:
        return (self.start + self.length) % 1

    def contains(self, x: Fraction) -> bool:
        t = (x - self.start) % 1
        if t == 0:
            return self.closed_start
        if t < self.length:
            return True
        return t == self.length and self.closed_end

    def covers(self, other: Arc) -> bool:
        """Point-set inclusion ``other ⊆ self``."""
        t = (other.start - self.start) % 1
        tail = t + other.length
        if tail > self.length:
            return False
        if t == 0 and other.closed_start and not self.closed_start:
            return False
        if tail == self.length and other.closed_end and not self.closed_end:
            return False
        return True

    def rotated(self, by: Fraction) -> Arc:
        return Arc(self.start + by, self.length, self.closed_start, self.closed_end)

    def mirrored(self) -> Arc:
        """Image under ``x -> -x``; the two ends swap roles."""
        return Arc(-(self.start + self.length), self.length, self.closed_end, self.closed_start)


def arcs_intersect(A: Arc, B: Arc) -> bool:
    t = (B.start - A.start) % 1
    if t < A.length or t + B.length > 1:
        return True
    if t == A.length and A.closed_end and B.closed_start:
        return True
    return t + B.length == 1 and B.closed_end and A.closed_start


@dataclass(frozen=True)
class ArcModel:
    """One arc per vertex ``1..n``."""

    arcs: Mapping[int, Arc]

    def __post_init__(self) -> None:
        arcs = dict(sorted((int(v), a) for v, a in self.arcs.items()))
        if set(arcs) != set(range(1, len(arcs) + 1)):
            raise GraphError(f"arc model keys must be 1..{len(arcs)}, got {sorted(arcs)}")
        object.__setattr__(self, "arcs", MappingProxyType(arcs))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def __getitem__(self, v: int) -> Arc:
        return self.arcs[v]

    def rotated(self, by: Fraction) -> ArcModel:
        return ArcModel({v: a.rotated(by) for v, a in self.arcs.items()})

    def mirrored(self) -> ArcModel:
        return ArcModel({v: a.mirrored() for v, a in self.arcs.items()})

    def without(self, v: int) -> ArcModel:
        """Drop vertex ``v`` and shift higher ids down by one."""
        return ArcModel({(u if u < v else u - 1): a for u, a in self.arcs.items() if u != v})


def intersection_graph(M: ArcModel) -> PlainGraph:
    items = list(M.arcs.items())
    edges = {
        (u, v)
        for x, (u, A) in enumerate(items)
        for v, B in items[x + 1 :]
        if arcs_intersect(A, B)
    }
    return PlainGraph(M.n, frozenset(edges))


def is_proper_model(M: ArcModel) -> bool:
    """No arc is a strict superset of another."""
    arcs = list(M.arcs.values())
    for x, A in enumerate(arcs):
        for B in arcs[x + 1 :]:
            ab, ba = A.covers(B), B.covers(A)
            if ab != ba:
                return False
    return True


def cyclic_labeling(D: Drawing) -> list[int]:
    """Vertices in increasing angle from 0."""
    return sorted(D.positions, key=D.positions.__getitem__)


@dataclass(frozen=True)
class Validity:
    """Outcome of the strict closeness check; truthy iff valid."""

    violations: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _checked(G: SignedGraph, D: Drawing) -> tuple[dict[int, set[int]], dict[int, set[int]]]:
    D.require_total(G.n)
    return G.neighbor_sets()


def is_valid_drawing(G: SignedGraph, D: Drawing) -> Validity:
    """Strict closeness check.

    The result lists every triple ``(i, j, k)`` where friend ``j`` is not strictly
    closer to ``i`` than enemy ``k``.
    """
    pos, neg = _checked(G, D)
    bad: list[tuple[int, int, int]] = []
    for i in G.vertices:
        if not pos[i] or not neg[i]:
            continue
        di = D[i]
        friends = sorted((distance(di, D[j]), j) for j in pos[i])
        enemies = sorted((distance(di, D[k]), k) for k in neg[i])
        if friends[-1][0] < enemies[0][0]:
            continue
        for dk, k in enemies:
            for dj, j in friends:
                if dj >= dk:
                    bad.append((i, j, k))
    return Validity(tuple(sorted(bad)))


def constrained_distances(G: SignedGraph, D: Drawing) -> tuple[list[Fraction], list[Fraction]]:
    """Friend and enemy distances seen from vertices that have both."""
    pos, neg = _checked(G, D)
    near: list[Fraction] = []
    far: list[Fraction] = []
    for i in G.vertices:
        if pos[i] and neg[i]:
            near.extend(distance(D[i], D[j]) for j in pos[i])
            far.extend(distance(D[i], D[k]) for k in neg[i])
    return near, far


def almost_valid_window(G: SignedGraph, D: Drawing) -> tuple[Fraction, Fraction] | None:
    """Closed interval of thresholds separating friends from enemies, or ``None``.

    Only vertices with at least one friend and one enemy impose constraints.
    When none do, the lower end falls back to the longest positive edge so the
    interval stays meaningful; a lower end of 0 is to be read as open.
    """
    near, far = constrained_distances(G, D)
    if near:
        lo = max(near)
    else:
        lo = max((distance(D[i], D[j]) for i, j in G.pos_edges), default=Fraction(0))
    hi = min(far, default=HALF)
    return (lo, hi) if lo <= hi else None


def rotate_drawing(D: Drawing, by: Fraction) -> Drawing:
    return Drawing({v: a + by for v, a in D.positions.items()})


def mirror_drawing(D: Drawing) -> Drawing:
    return Drawing({v: -a for v, a in D.positions.items()})


def min_gap(points: Iterable[Fraction]) -> Fraction:
    """Smallest clockwise gap between cyclically consecutive distinct points."""
    pts = sorted(set(points))
    if len(pts) < 2:
        return Fraction(1)
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(pts[0] + 1 - pts[-1])
    return min(gaps)
