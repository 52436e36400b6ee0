"""Valid drawings straight from a proper model's start order, by linear programming.

Some proper circular-arc graphs admit no arc model with one common length,
open or closed ends notwithstanding, so no single threshold separates
friends from enemies for every vertex at once.  Per-vertex thresholds still
exist.  With the start order ``sigma`` and reach ``E`` fixed, put vertex
``sigma[p]`` at lifted position ``x[p]`` and measure each friend along the side
its arc reaches it from.  Then "friend closer than enemy by a margin ``t``" is
linear, and only the first enemy in each direction matters.  The LP optimum is
rounded to a grid finer than the margin and checked exactly.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil
from typing import Sequence

from .errors import ConstructionError
from .geometry import Drawing, is_valid_drawing
from .graph import SignedGraph

log = logging.getLogger(__name__)


def margin_drawing(G: SignedGraph, sigma: Sequence[int], reach: Sequence[int]) -> Drawing:
    """Valid drawing of the complete graph ``G`` whose positive part ``(sigma, reach)`` realizes."""
    import numpy as np  # deferred: only this fallback needs an LP solver
    from scipy.optimize import linprog

    n = len(sigma)
    pos, _ = G.neighbor_sets()
    at = {v: p for p, v in enumerate(sigma)}
    nvar = n + 1  # x[0..n-1], t
    rows: list = []
    rhs: list[float] = []

    def lifted(p: int, m: int) -> tuple[dict[int, float], float]:
        """``x[p + m] - x[p]`` for ``0 <= m < n``, as a linear form."""
        q = p + m
        if q < n:
            return ({q: 1.0, p: -1.0} if m else {}), 0.0
        return {q - n: 1.0, p: -1.0}, 1.0

    def le(lhs: tuple[dict[int, float], float], rhs_form: tuple[dict[int, float], float], slack: int) -> None:
        """``lhs + slack * t <= rhs_form``."""
        row = np.zeros(nvar)
        for i, c in lhs[0].items():
            row[i] += c
        for i, c in rhs_form[0].items():
            row[i] -= c
        row[n] += slack
        rows.append(row)
        rhs.append(rhs_form[1] - lhs[1])

    zero: tuple[dict[int, float], float] = ({}, 0.0)
    for p in range(n):
        le(zero, lifted(p, 1), 1)
    for p, v in enumerate(sigma):
        friends = pos[v]
        if not friends or len(friends) == n - 1:
            continue
        ahead = next(m for m in range(1, n) if sigma[(p + m) % n] not in friends)
        behind = next(m for m in range(1, n) if sigma[(p - m) % n] not in friends)
        near_ahead = lifted(p, ahead)
        near_behind = lifted((p - behind) % n, behind)
        for w in friends:
            m = (at[w] - p) % n
            if p + m <= reach[p]:
                far = lifted(p, m)
            else:
                far = lifted(at[w], n - m)
            le(far, near_ahead, 1)
            le(far, near_behind, 1)
    cost = np.zeros(nvar)
    cost[n] = -1.0
    bounds = [(0.0, 0.0)] + [(0.0, 1.0)] * (n - 1) + [(None, 1.0)]
    res = linprog(cost, A_ub=np.array(rows), b_ub=np.array(rhs), bounds=bounds, method="highs")
    if res.status != 0 or res.x[n] <= 0:
        raise ConstructionError("no positive-margin drawing for this start order")
    margin = Fraction(float(res.x[n]))
    grid = ceil(8 / margin)
    drawing = Drawing({v: Fraction(round(float(res.x[p]) * grid), grid) % 1 for p, v in enumerate(sigma)})
    if not is_valid_drawing(G, drawing):
        raise ConstructionError("rounded margin drawing failed verification")
    log.debug("margin drawing with margin %.3g on grid 1/%d", float(margin), grid)
    return drawing
