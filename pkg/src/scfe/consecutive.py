"""Consecutive-ones and circular-ones orderings.

Sets that overlap (intersect without nesting) pin each other's relative
layout, so each overlap component is laid out as a sequence of blocks that is
unique up to reversal.  The unions of different components nest or are
disjoint, and a nested union always sits inside a single block of its parent;
the final order is read off that tree.  Circular orderings reduce to linear
ones by complementing every set that contains a fixed element.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Sequence, TypeVar

T = TypeVar("T", bound=Hashable)


def _overlap(a: frozenset, b: frozenset) -> bool:
    return bool(a & b) and not a <= b and not b <= a


def _insert(blocks: list[frozenset], s: frozenset) -> list[frozenset] | None:
    """Refine ``blocks`` so that ``s`` becomes a contiguous run, or fail."""
    union = frozenset().union(*blocks)
    fresh = s - union
    hit = [i for i, b in enumerate(blocks) if b & s]
    if not hit:
        return None
    a, z = hit[0], hit[-1]
    if hit != list(range(a, z + 1)):
        return None
    if any(not blocks[i] <= s for i in range(a + 1, z)):
        return None
    out = list(blocks)
    r = len(out)
    if fresh:
        if z == r - 1 and all(out[i] <= s for i in range(a + 1, r)):
            rest, mine = out[a] - s, out[a] & s
            out[a : a + 1] = [x for x in (rest, mine) if x]
            out.append(fresh)
            return out
        if a == 0 and all(out[i] <= s for i in range(0, z)):
            mine, rest = out[z] & s, out[z] - s
            out[z : z + 1] = [x for x in (mine, rest) if x]
            out.insert(0, fresh)
            return out
        return None
    if a == z:
        return None
    mine, rest = out[z] & s, out[z] - s
    out[z : z + 1] = [x for x in (mine, rest) if x]
    rest, mine = out[a] - s, out[a] & s
    out[a : a + 1] = [x for x in (rest, mine) if x]
    return out


def _components(sets: list[frozenset]) -> list[list[int]]:
    """Overlap components, each listed in BFS order."""
    m = len(sets)
    nbrs = [[j for j in range(m) if j != i and _overlap(sets[i], sets[j])] for i in range(m)]
    seen = [False] * m
    comps = []
    for root in range(m):
        if seen[root]:
            continue
        seen[root] = True
        order, queue = [], deque([root])
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in nbrs[i]:
                if not seen[j]:
                    seen[j] = True
                    queue.append(j)
        comps.append(order)
    return comps


def consecutive_ones(ground: Sequence[T], sets: Iterable[Iterable[T]]) -> list[T] | None:
    """An ordering of ``ground`` in which every set is contiguous, or ``None``."""
    ground = list(ground)
    everything = frozenset(ground)
    family = sorted(
        {frozenset(s) for s in sets if 1 < len(frozenset(s)) < len(everything)},
        key=lambda s: (len(s), sorted(map(ground.index, s))),
    )
    if any(not s <= everything for s in family):
        raise ValueError("set contains elements outside the ground set")

    layouts: list[tuple[frozenset, list[frozenset], int]] = []
    for comp in _components(family):
        blocks: list[frozenset] | None = [family[comp[0]]]
        for i in comp[1:]:
            blocks = _insert(blocks, family[i])
            if blocks is None:
                return None
        layouts.append((frozenset().union(*blocks), blocks, len(comp)))

    # Largest unions first; a lone set precedes a component with the same union.
    layouts.sort(key=lambda t: (-len(t[0]), t[2]))
    children: dict[tuple[int, int], list[int]] = {}
    for c, (u, _, _) in enumerate(layouts):
        slot = (-1, 0)
        for d in range(c - 1, -1, -1):
            hit = [b for b, blk in enumerate(layouts[d][1]) if u <= blk]
            if hit:
                slot = (d, hit[0])
                break
        children.setdefault(slot, []).append(c)

    rank = {x: i for i, x in enumerate(ground)}

    def expand(elements: frozenset, slot: tuple[int, int]) -> list[T]:
        seq: list[T] = []
        covered: set = set()
        for c in children.get(slot, []):
            covered |= layouts[c][0]
            for b, blk in enumerate(layouts[c][1]):
                seq.extend(expand(blk, (c, b)))
        seq.extend(sorted(elements - covered, key=rank.__getitem__))
        return seq

    order = expand(everything, (-1, 0))
    pos = {x: i for i, x in enumerate(order)}
    for s in family:
        idx = sorted(pos[x] for x in s)
        if idx[-1] - idx[0] != len(idx) - 1:
            raise AssertionError(f"consecutive layout broke set {sorted(s, key=rank.__getitem__)}")
    return order


def circular_ones(ground: Sequence[T], sets: Iterable[Iterable[T]]) -> list[T] | None:
    """An ordering of ``ground`` in which every set is contiguous cyclically, or ``None``."""
    ground = list(ground)
    if not ground:
        return []
    pivot = ground[0]
    everything = frozenset(ground)
    flipped = [everything - frozenset(s) if pivot in s else frozenset(s) for s in sets]
    return consecutive_ones(ground, flipped)


def is_consecutive(order: Sequence[T], s: Iterable[T], cyclic: bool = False) -> bool:
    """Whether ``s`` occupies a contiguous (optionally cyclic) stretch of ``order``."""
    s = set(s)
    n = len(order)
    if not s or len(s) == n:
        return True
    inside = [x in s for x in order]
    runs = sum(1 for i in range(n) if inside[i] and not inside[i - 1])
    if cyclic:
        return runs == 1
    starts = sum(1 for i in range(n) if inside[i] and (i == 0 or not inside[i - 1]))
    return starts == 1
