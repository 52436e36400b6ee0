"""Signed graphs with unknown pairs: trying every way to fill them in.

Each missing pair can become a friend or an enemy, so k missing pairs give
2^k completions.  A drawable graph usually stops early; an undrawable one
has to refute every completion.
"""

import random

from scfe import PlainGraph, SignedGraph, decide_general, gen_instance

rng = random.Random(0)
base = gen_instance(3, 12, "pca")
pairs = sorted(base.pos_edges | base.neg_edges)
print("drawable base, n = 12")
for k in (1, 4, 8, 12):
    gone = set(rng.sample(pairs, k))
    G = SignedGraph(12, base.pos_edges - gone, base.neg_edges - gone)
    res = decide_general(G)
    print(f"  k = {k:2d}: {res.status}, examined {res.examined} of {2 ** k}")

# The net on vertices 1..6 stays fully signed, so no completion can rescue it.
net = {(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)}
extra = {(i, j) for i in range(7, 13) for j in range(i + 1, 13) if (i + j) % 3}
full = SignedGraph.from_positive(PlainGraph(12, frozenset(net | extra)))
away = sorted(p for p in full.pos_edges | full.neg_edges if p[1] > 6)
print("net plus six vertices, unknown pairs away from the net")
for k in (1, 4, 8):
    gone = set(rng.sample(away, k))
    G = SignedGraph(12, full.pos_edges - gone, full.neg_edges - gone)
    res = decide_general(G)
    print(f"  k = {k}: {res.status}, refuted {res.refuted} of {2 ** k}")
