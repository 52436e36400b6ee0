"""Signed graphs, plain graphs and completions.

Vertices are the integers ``1..n``.  Unordered pairs are stored as sorted
tuples ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Iterator, Literal, Mapping

from .errors import GraphError, PreconditionError

Pair = tuple[int, int]
Sign = Literal["+", "-"]
SIGNS: tuple[Sign, Sign] = ("+", "-")


def pair(i: int, j: int) -> Pair:
    """Normalize an unordered pair."""
    if i == j:
        raise GraphError(f"loop at vertex {i}")
    return (i, j) if i < j else (j, i)


def _normalize_pairs(n: int, pairs: Iterable[tuple[int, int]], what: str) -> frozenset[Pair]:
    out: set[Pair] = set()
    for raw in pairs:
        i, j = raw
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"{what} edge {raw} has an id outside 1..{n}")
        out.add(pair(i, j))
    return frozenset(out)


def _check_vertex(n: int, i: int) -> None:
    if not (isinstance(i, int) and 1 <= i <= n):
        raise PreconditionError(f"vertex {i!r} outside 1..{n}")


@dataclass(frozen=True)
class PlainGraph:
    """Undirected simple graph on ``1..n``."""

    n: int
    edges: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        object.__setattr__(self, "edges", _normalize_pairs(self.n, self.edges, "plain"))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and pair(i, j) in self.edges

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def induced(self, keep: Iterable[int]) -> tuple[PlainGraph, list[int]]:
        """Induced subgraph relabelled to ``1..m``; also returns the old ids in order."""
        old = sorted(set(keep))
        new_of = {v: k + 1 for k, v in enumerate(old)}
        edges = {(new_of[i], new_of[j]) for i, j in self.edges if i in new_of and j in new_of}
        return PlainGraph(len(old), frozenset(edges)), old

    def complement(self) -> PlainGraph:
        return PlainGraph(self.n, frozenset(p for p in combinations(self.vertices, 2) if p not in self.edges))

    @classmethod
    def complete(cls, n: int) -> PlainGraph:
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))


@dataclass(frozen=True)
class SignedGraph:
    """Signed graph with disjoint positive and negative edge sets.

    Pairs in neither set are *missing*; a graph with no missing pairs is
    complete.
    """

    n: int
    pos_edges: frozenset[Pair] = field(default_factory=frozenset)
    neg_edges: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        pos = _normalize_pairs(self.n, self.pos_edges, "positive")
        neg = _normalize_pairs(self.n, self.neg_edges, "negative")
        clash = pos & neg
        if clash:
            raise GraphError(f"pairs both positive and negative: {sorted(clash)}")
        object.__setattr__(self, "pos_edges", pos)
        object.__setattr__(self, "neg_edges", neg)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def k(self) -> int:
        """Number of missing pairs."""
        return self.n * (self.n - 1) // 2 - len(self.pos_edges) - len(self.neg_edges)

    @property
    def is_complete(self) -> bool:
        return self.k == 0

    def sign(self, i: int, j: int) -> Sign | None:
        p = pair(i, j)
        if p in self.pos_edges:
            return "+"
        if p in self.neg_edges:
            return "-"
        return None

    def neighbor_sets(self) -> tuple[dict[int, set[int]], dict[int, set[int]]]:
        """Positive and negative adjacency maps in one pass."""
        pos: dict[int, set[int]] = {v: set() for v in self.vertices}
        neg: dict[int, set[int]] = {v: set() for v in self.vertices}
        for table, edges in ((pos, self.pos_edges), (neg, self.neg_edges)):
            for i, j in edges:
                table[i].add(j)
                table[j].add(i)
        return pos, neg

    @classmethod
    def from_positive(cls, H: PlainGraph) -> SignedGraph:
        """Complete signed graph whose positive part is ``H``."""
        neg = frozenset(p for p in combinations(H.vertices, 2) if p not in H.edges)
        return cls(H.n, H.edges, neg)


def positive_neighbors(G: SignedGraph, i: int, closed: bool = False) -> set[int]:
    """Friends of ``i``; with ``closed`` the vertex itself is included."""
    _check_vertex(G.n, i)
    out = {b if a == i else a for a, b in G.pos_edges if i in (a, b)}
    if closed:
        out.add(i)
    return out


def negative_neighbors(G: SignedGraph, i: int) -> set[int]:
    _check_vertex(G.n, i)
    return {b if a == i else a for a, b in G.neg_edges if i in (a, b)}


def missing_pairs(G: SignedGraph) -> list[Pair]:
    """Pairs with no sign, in lexicographic order."""
    return [p for p in combinations(G.vertices, 2) if p not in G.pos_edges and p not in G.neg_edges]


def positive_subgraph(G: SignedGraph) -> PlainGraph:
    return PlainGraph(G.n, G.pos_edges)


@dataclass(frozen=True)
class Completion:
    """Sign choice for each missing pair of some signed graph."""

    assignments: Mapping[Pair, Sign] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Pair, Sign] = {}
        for p, s in self.assignments.items():
            if s not in SIGNS:
                raise GraphError(f"sign {s!r} for {p} is not '+' or '-'")
            clean[pair(*p)] = s
        object.__setattr__(self, "assignments", MappingProxyType(dict(sorted(clean.items()))))

    def __iter__(self) -> Iterator[tuple[Pair, Sign]]:
        return iter(self.assignments.items())

    def __len__(self) -> int:
        return len(self.assignments)

    def positive(self) -> list[Pair]:
        return [p for p, s in self.assignments.items() if s == "+"]

    @classmethod
    def from_signs(cls, pairs: Iterable[Pair], signs: Iterable[Sign]) -> Completion:
        return cls(dict(zip(pairs, signs, strict=True)))


def apply_completion(G: SignedGraph, C: Completion) -> SignedGraph:
    """Complete ``G`` with the signs in ``C``; the domains must match exactly."""
    want = set(missing_pairs(G))
    have = set(C.assignments)
    if want != have:
        extra, lacking = sorted(have - want), sorted(want - have)
        raise GraphError(f"completion domain mismatch: extra={extra} missing={lacking}")
    pos = set(G.pos_edges)
    neg = set(G.neg_edges)
    for p, s in C:
        (pos if s == "+" else neg).add(p)
    return SignedGraph(G.n, frozenset(pos), frozenset(neg))
