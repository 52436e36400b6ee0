"""Removing ties from an almost-valid drawing, one vertex per step.

An almost-valid drawing has a single threshold with every friend at most that
far and every enemy at least that far.  A vertex whose friend and enemy sit at
exactly the threshold is tied; nudging it a quarter of the smallest gap toward
the friend breaks the tie without changing the circular order.
"""

from fractions import Fraction as F

from scfe import Drawing, PlainGraph, SignedGraph, cyclic_labeling, repair_ties, verify
from scfe.geometry import distance


def show(title, G, D, delta):
    trace = repair_ties(G, D, delta)
    print(f"{title}: ties at {trace.initial_ties} vertices, repaired in {trace.steps} step(s)")
    for step, (v, before, after) in enumerate(zip(trace.moved, trace.drawings, trace.drawings[1:]), start=1):
        print(f"  step {step}: vertex {v} moves {before[v]} -> {after[v]}")
    print(f"  order kept: {cyclic_labeling(trace.result)}, valid: {verify(G, trace.result).valid}")
    return trace.result


G = SignedGraph(3, frozenset({(1, 2)}), frozenset({(1, 3)}))
D = Drawing({1: F(0), 2: F(1, 4), 3: F(3, 4)})
after = show("three vertices", G, D, F(1, 4))
print(f"  vertex 1 now sees its friend at {distance(after[1], after[2])} and its enemy at {distance(after[1], after[3])}")

n = 8
pos = {(i, i % n + 1) for i in range(1, n)} | {(1, n), (1, 3), (4, 6)}
G = SignedGraph.from_positive(PlainGraph(n, frozenset(pos)))
show("octagon with two chords", G, Drawing({i: F(i - 1, n) for i in range(1, n + 1)}), F(2, n))
