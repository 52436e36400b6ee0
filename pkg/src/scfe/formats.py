"""Text formats for signed graphs and drawings.

Graph files::

    n 4
    1 2 +
    1 3 -      # comments run to end of line

Drawing files hold ``<id> <p>/<q> <radians>`` per vertex; the exact fraction
of a turn is authoritative and the radians column is only for people.
"""

from __future__ import annotations

from fractions import Fraction
from math import pi

from .errors import DrawingError, GraphError, ParseError
from .geometry import Drawing
from .graph import Pair, SignedGraph


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            out.append((number, tokens))
    return out


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", line) from None


def parse_graph(text: str) -> SignedGraph:
    """Strict parse; every error names its line."""
    rows = _lines(text)
    if not rows:
        raise ParseError("empty graph file: expected header 'n <N>'")
    line, head = rows[0]
    if len(head) != 2 or head[0] != "n":
        raise ParseError("header must read 'n <N>'", line)
    n = _int(head[1], line, "vertex count")
    if n < 0:
        raise ParseError(f"vertex count {n} is negative", line)
    signs: dict[Pair, str] = {}
    for line, tokens in rows[1:]:
        if len(tokens) != 3:
            raise ParseError(f"expected '<u> <v> <+|->', got {' '.join(tokens)!r}", line)
        u, v = _int(tokens[0], line, "vertex"), _int(tokens[1], line, "vertex")
        sign = tokens[2]
        if sign not in ("+", "-"):
            raise ParseError(f"sign {sign!r} is not '+' or '-'", line)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range 1..{n} in pair {u} {v}", line)
        if u >= v:
            raise ParseError(f"pair {u} {v} must satisfy u < v", line)
        if (u, v) in signs:
            kind = "duplicate" if signs[(u, v)] == sign else "contradictory"
            raise ParseError(f"{kind} line for pair {u} {v}", line)
        signs[(u, v)] = sign
    try:
        return SignedGraph(
            n,
            frozenset(p for p, s in signs.items() if s == "+"),
            frozenset(p for p, s in signs.items() if s == "-"),
        )
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def write_graph(G: SignedGraph) -> str:
    rows = [f"n {G.n}"]
    signed = [(p, "+") for p in G.pos_edges] + [(p, "-") for p in G.neg_edges]
    rows += [f"{u} {v} {s}" for (u, v), s in sorted(signed)]
    return "\n".join(rows) + "\n"


def parse_drawing(text: str) -> Drawing:
    """Read exact angles; the radians column is optional and ignored."""
    positions: dict[int, Fraction] = {}
    for line, tokens in _lines(text):
        if len(tokens) not in (2, 3):
            raise ParseError(f"expected '<id> <p>/<q> [radians]', got {' '.join(tokens)!r}", line)
        v = _int(tokens[0], line, "vertex")
        if v in positions:
            raise ParseError(f"vertex {v} listed twice", line)
        try:
            angle = Fraction(tokens[1])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"angle {tokens[1]!r} is not an exact fraction", line) from None
        if "." in tokens[1] or "e" in tokens[1].lower():
            raise ParseError(f"angle {tokens[1]!r} must be written as p/q", line)
        positions[v] = angle
    try:
        return Drawing(positions)
    except DrawingError as exc:
        raise ParseError(str(exc)) from exc


def write_drawing(D: Drawing) -> str:
    rows = []
    for v, a in sorted(D.positions.items()):
        rows.append(f"{v} {a.numerator}/{a.denominator} {float(a) * 2 * pi:.6f}")
    return "\n".join(rows) + "\n"
