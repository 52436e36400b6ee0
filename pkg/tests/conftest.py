from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations

import pytest

from scfe import Drawing, PlainGraph, SignedGraph


def plain(n, edges):
    return PlainGraph(n, frozenset(edges))


def cycle(n):
    return plain(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n):
    return plain(n, [(i, i + 1) for i in range(1, n)])


def complete(n):
    return plain(n, combinations(range(1, n + 1), 2))


def net():
    """Triangle 1-2-3 with pendants 4, 5, 6 hanging off 1, 2, 3."""
    return plain(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])


def signed_complete(H):
    return SignedGraph.from_positive(H)


def square():
    """Friends around a 4-cycle, enemies across the diagonals."""
    return SignedGraph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}), frozenset({(1, 3), (2, 4)}))


def square_drawing():
    return Drawing({1: F(0), 2: F(1, 4), 3: F(1, 2), 4: F(3, 4)})


def tie_example():
    """Vertex 1 sees friend 2 and enemy 3 both at a quarter turn."""
    G = SignedGraph(3, frozenset({(1, 2)}), frozenset({(1, 3)}))
    return G, Drawing({1: F(0), 2: F(1, 4), 3: F(3, 4)})


def atlas(max_n=7):
    """One labelled representative of every unlabelled graph on at most ``max_n`` vertices."""
    from networkx.generators.atlas import graph_atlas_g

    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_n:
            yield plain(n, [(a + 1, b + 1) for a, b in g.edges()])


def all_labelled(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield plain(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


# A twin-free proper circular-arc graph on 8 vertices that admits no arc model
# with one common length, whatever the open/closed ends; found by random search.
NO_COMMON_LENGTH = plain(
    8,
    [(1, 2), (1, 3), (1, 6), (1, 7), (1, 8), (2, 3), (2, 8), (3, 4), (3, 5), (3, 6), (3, 8),
     (4, 5), (4, 6), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)],
)


@pytest.fixture
def sq():
    return square(), square_drawing()


def double_oracle(G):
    """Whether some completion of ``G`` has a positive part the brute-force oracle accepts."""
    from itertools import product

    from scfe import Completion, apply_completion, missing_pairs, oracle_pca, positive_subgraph

    pairs = missing_pairs(G)
    return any(
        oracle_pca(positive_subgraph(apply_completion(G, Completion.from_signs(pairs, signs))))
        for signs in product("+-", repeat=len(pairs))
    )


def random_signed(rng, n, k):
    """Uniform signs on all pairs, then ``k`` of them left unsigned."""
    pairs = list(combinations(range(1, n + 1), 2))
    gone = set(rng.sample(pairs, min(k, len(pairs))))
    pos = {p for p in pairs if p not in gone and rng.random() < 0.5}
    neg = set(pairs) - gone - pos
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def pytest_configure(config):
    config._criteria = []


@pytest.fixture
def report(request, capsys):
    """Record one pass/fail line for an acceptance criterion and echo it immediately."""

    def emit(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        request.config._criteria.append(line)
        with capsys.disabled():
            print(f"\n[acceptance] {line}")
        return ok

    return emit


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criteria", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
