"""A proper circular-arc graph with no equal-length arc model.

Proper circular-arc graphs are often described as those with a model whose
arcs share one length, open or closed ends allowed.  The eight-vertex graph
below has a proper model, yet no common-length model exists: the solver
detects this and places the vertices with a linear program that maximizes
the smallest slack instead, then checks the result exactly.
"""

from scfe import NoEqualLengthModel, PlainGraph, SignedGraph, decide_complete, recognize_pca, unit_model, verify

edges = [(1, 2), (1, 3), (1, 6), (1, 7), (1, 8), (2, 3), (2, 8), (3, 4), (3, 5), (3, 6), (3, 8),
         (4, 5), (4, 6), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]
H = PlainGraph(8, frozenset(edges))

rec = recognize_pca(H)
print(f"proper model found: {bool(rec)}, vertex order {list(rec.order)}")
try:
    unit_model(H)
except NoEqualLengthModel as exc:
    print(f"equal lengths: impossible ({exc})")

G = SignedGraph.from_positive(H)
res = decide_complete(G)
print(f"decision: {res.status} via {res.route}")
print("\n".join(verify(G, res.drawing).lines()))
# No single threshold separates friends from enemies here, so the window is
# empty even though every vertex individually has its friends closer.
