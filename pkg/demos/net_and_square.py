"""Two small signed graphs: one that cannot be drawn, one that can.

The net (a triangle with a pendant vertex on each corner) is not a proper
circular-arc graph, so a complete signed graph with the net as its friends
has no valid drawing.  The square with enemies across its diagonals does,
and we build one and save pictures of it.

    python demos/net_and_square.py [output-dir]
"""

import sys
from pathlib import Path

from scfe import PlainGraph, SignedGraph, decide_complete, render_svg, verify, write_drawing

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

net = PlainGraph(6, frozenset({(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)}))
res = decide_complete(SignedGraph.from_positive(net))
print(f"net: {res.status}")

square = SignedGraph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}), frozenset({(1, 3), (2, 4)}))
res = decide_complete(square)
print(f"square: {res.status} via {res.route}, common arc length {res.equal_length.delta}")
print(write_drawing(res.drawing), end="")
print("\n".join(verify(square, res.drawing).lines()))

(out / "square.svg").write_text(render_svg(square, res.drawing))
(out / "square_model.svg").write_text(render_svg(square, M=res.equal_length.model))
print(f"pictures written to {out}/")
