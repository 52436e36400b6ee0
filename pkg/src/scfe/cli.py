"""``scfe`` command line.

Exit codes: 0 drawable (or valid), 1 not drawable (or invalid), 2 usage or
input error, 3 internal failure.  ``SCFE_LOG`` sets the log level.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Sequence

from .errors import ConstructionError, ScfeError
from .formats import parse_drawing, parse_graph, write_drawing, write_graph
from .generate import gen_instance
from .graph import Completion, SignedGraph, apply_completion, missing_pairs, positive_subgraph
from .oracle import oracle_pca
from .solver import DEFAULT_MAX_K, decide_general, verify
from .svg import render_drawing, render_model

DRAWABLE, NOT_DRAWABLE, USAGE, INTERNAL = 0, 1, 2, 3


def _read_graph(path: str) -> SignedGraph:
    return parse_graph(Path(path).read_text())


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_decide(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    res = decide_general(G, max_k=args.max_k, exhaustive=args.exhaustive)
    print(res.status)
    print(f"completions examined: {res.examined}")
    print(f"completions refuted: {res.refuted}")
    if res.drawable_completions is not None:
        print(f"drawable completions: {res.drawable_completions}")
    return DRAWABLE if res.drawable else NOT_DRAWABLE


def _cmd_draw(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    res = decide_general(G, max_k=args.max_k)
    if not res.drawable:
        print("not-drawable", file=sys.stderr)
        return NOT_DRAWABLE
    assert res.drawing is not None
    _emit(write_drawing(res.drawing), args.output)
    if args.svg:
        Path(args.svg).write_text(render_drawing(G, res.drawing))
    if args.model_svg:
        model = res.equal_length.model if res.equal_length is not None else res.proper_model
        if model is not None:
            Path(args.model_svg).write_text(render_model(model))
    return DRAWABLE


def _cmd_verify(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    D = parse_drawing(Path(args.drawing).read_text())
    report = verify(G, D)
    print("\n".join(report.lines()))
    return DRAWABLE if report.valid else NOT_DRAWABLE


def _cmd_oracle(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    pairs = missing_pairs(G)
    for signs in product("+-", repeat=len(pairs)):
        CG = apply_completion(G, Completion.from_signs(pairs, signs))
        if oracle_pca(positive_subgraph(CG), n_max=args.n_max):
            print("drawable")
            return DRAWABLE
    print("not-drawable")
    return NOT_DRAWABLE


def _cmd_gen(args: argparse.Namespace) -> int:
    G = gen_instance(args.seed, args.n, args.mode, Fraction(args.missing_prob))
    _emit(write_graph(G), args.output)
    return DRAWABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scfe", description="Signed graphs drawn on a circle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a valid drawing exists")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--exhaustive", action="store_true", help="examine every completion")
    p.set_defaults(run=_cmd_decide)

    p = sub.add_parser("draw", help="construct a valid drawing")
    p.add_argument("graph")
    p.add_argument("-o", "--output", help="drawing file (default: stdout)")
    p.add_argument("--svg", help="write an SVG of the drawing")
    p.add_argument("--model-svg", help="write an SVG of the arc model used")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.set_defaults(run=_cmd_draw)

    p = sub.add_parser("verify", help="check a drawing against a graph")
    p.add_argument("graph")
    p.add_argument("drawing")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force decision for small graphs")
    p.add_argument("graph")
    p.add_argument("--n-max", type=int, default=7)
    p.set_defaults(run=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("pca", "random"), required=True)
    p.add_argument("--missing-prob", default="0", help="exact rational, e.g. 1/4")
    p.add_argument("-o", "--output", help="graph file (default: stdout)")
    p.set_defaults(run=_cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    level = os.environ.get("SCFE_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return int(args.run(args))
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except (ScfeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
