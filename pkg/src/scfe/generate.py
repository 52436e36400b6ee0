"""Seeded instance generators."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Literal

from .errors import PreconditionError
from .geometry import Arc, ArcModel, intersection_graph
from .graph import SignedGraph, pair

Mode = Literal["pca", "random"]


def random_equal_model(rng: random.Random, n: int) -> ArcModel:
    """Closed arcs of one random length at random rational starts.

    Starts are drawn from a grid of ``4n`` points so that shared starts and
    touching ends show up regularly.
    """
    grid = 4 * n
    delta = Fraction(rng.randint(1, grid // 2), grid)
    return ArcModel({v: Arc(Fraction(rng.randrange(grid), grid), delta) for v in range(1, n + 1)})


def gen_instance(seed: int, n: int, mode: Mode, missing_prob: Fraction = Fraction(0)) -> SignedGraph:
    """Deterministic per ``(seed, n, mode, missing_prob)``.

    ``pca``: the complete signed graph whose positive part is the intersection
    graph of :func:`random_equal_model`, hence drawable.  ``random``: each pair
    is missing with probability ``missing_prob``, otherwise positive or negative
    with equal odds.
    """
    if n < 1:
        raise PreconditionError(f"need at least one vertex, got {n}")
    rng = random.Random(seed)
    if mode == "pca":
        return SignedGraph.from_positive(intersection_graph(random_equal_model(rng, n)))
    if mode != "random":
        raise PreconditionError(f"unknown mode {mode!r}")
    p = Fraction(missing_prob)
    if not 0 <= p <= 1:
        raise PreconditionError(f"missing probability {p} outside [0, 1]")
    pos, neg = set(), set()
    scale = p.denominator
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.randrange(scale) < p.numerator:
                continue
            (pos if rng.random() < 0.5 else neg).add(pair(i, j))
    return SignedGraph(n, frozenset(pos), frozenset(neg))
