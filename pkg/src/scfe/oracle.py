"""Exhaustive proper circular-arc test for small graphs.

Shares no code with the recognizer: endpoints live on the integer cycle
``0..2n-1``, arcs are bitmasks of the positions they cover, and the graph is
matched against every relabelling.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .errors import PreconditionError
from .graph import PlainGraph
from .recognition import EndpointWord

Edges = frozenset[tuple[int, int]]


def _word_graph(word: list[tuple[str, int]], n: int) -> Edges | None:
    """Edge set realized by ``word`` (0-based ids), or ``None`` if two arcs nest."""
    size = 2 * n
    where = {s: t for t, s in enumerate(word)}
    masks = []
    for v in range(n):
        a, b = where[("L", v)], where[("R", v)]
        if b < a:
            b += size
        m = 0
        for x in range(a, b + 1):
            m |= 1 << (x % size)
        masks.append(m)
    for i in range(n):
        for j in range(n):
            if i != j and masks[i] != masks[j] and masks[i] & masks[j] == masks[i]:
                return None
    return frozenset((i, j) for i, j in combinations(range(n), 2) if masks[i] & masks[j])


@lru_cache(maxsize=None)
def _catalogue(n: int) -> dict[Edges, tuple[tuple[str, int], ...]]:
    """Every graph realized with starts in order ``0..n-1``, keyed to one word.

    Rotating the word puts ``L_0`` first; the ends then follow the same cyclic
    order from some offset, interleaved with the remaining starts in every way.
    """
    found: dict[Edges, tuple[tuple[str, int], ...]] = {}
    starts = [("L", v) for v in range(1, n)]
    for offset in range(n):
        ends = [("R", (offset + m) % n) for m in range(n)]
        for slots in combinations(range(2 * n - 1), n):
            chosen = set(slots)
            word = [("L", 0)]
            li = ri = 0
            for s in range(2 * n - 1):
                if s in chosen:
                    word.append(ends[ri])
                    ri += 1
                else:
                    word.append(starts[li])
                    li += 1
            g = _word_graph(word, n)
            if g is not None and g not in found:
                found[g] = tuple(word)
    return found


def oracle_word(H: PlainGraph, n_max: int = 7) -> EndpointWord | None:
    """An endpoint word whose closed model has intersection graph ``H``, or ``None``."""
    n = H.n
    if n > n_max:
        raise PreconditionError(f"oracle limited to n <= {n_max}, got {n}")
    if n == 0:
        return EndpointWord(())
    catalogue = _catalogue(n)
    edges = [(i - 1, j - 1) for i, j in H.edges]
    for perm in permutations(range(n)):
        image = frozenset((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in edges)
        word = catalogue.get(image)
        if word is not None:
            back = {perm[v]: v for v in range(n)}
            return EndpointWord(tuple((k, back[v] + 1) for k, v in word))
    return None


def oracle_pca(H: PlainGraph, n_max: int = 7) -> bool:
    """Brute-force decision of whether ``H`` is a proper circular-arc graph."""
    return oracle_word(H, n_max) is not None
