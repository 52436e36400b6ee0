"""Acceptance criteria, one test each; every test reports a PASS/FAIL line."""

import hashlib
import random
import shutil
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from conftest import all_labelled, atlas, double_oracle, net, plain, random_signed, signed_complete, tie_example
from scfe import (
    Drawing,
    SignedGraph,
    almost_valid_window,
    apply_completion,
    cyclic_labeling,
    decide_complete,
    decide_general,
    drawing_to_completion,
    drawing_to_model,
    equalize_lengths,
    gen_instance,
    oracle_pca,
    positive_subgraph,
    repair_ties,
    verify,
    verify_model,
    write_graph,
)
from scfe.construction import pairwise_intersections_match, same_cyclic_order
from scfe.geometry import distance

SCFE = [shutil.which("scfe")] if shutil.which("scfe") else [sys.executable, "-m", "scfe.cli"]


def _run(*args, cwd=None):
    return subprocess.run([*SCFE, *args], capture_output=True, text=True, cwd=cwd)


@pytest.fixture(scope="module")
def small_graph_decisions():
    """Decision, oracle verdict and proper model for every positive part in the small-graph sweep."""
    graphs = [H for n in range(1, 6) for H in all_labelled(n)] + [H for H in atlas(6) if H.n == 6]
    t0 = time.perf_counter()
    rows = []
    for H in graphs:
        res = decide_complete(signed_complete(H))
        rows.append((H, res, oracle_pca(H)))
    return rows, time.perf_counter() - t0


@pytest.fixture(scope="module")
def generated_runs():
    rows = []
    for seed in range(500):
        n = 5 + seed % 36
        G = gen_instance(seed, n, "pca")
        t0 = time.perf_counter()
        res = decide_complete(G)
        rows.append((G, res, time.perf_counter() - t0))
    return rows


def test_net_rejection(tmp_path, report):
    path = tmp_path / "net.txt"
    path.write_text(write_graph(signed_complete(net())))
    t0 = time.perf_counter()
    decided = _run("decide", str(path))
    elapsed = time.perf_counter() - t0
    oracle = _run("oracle", str(path))
    ok = decided.returncode == 1 and decided.stdout.startswith("not-drawable") and oracle.returncode == 1 and elapsed < 1
    assert report("1 net rejection", ok, f"decide exit {decided.returncode}, oracle exit {oracle.returncode}, {elapsed:.2f}s"), decided.stderr
    assert ok


def test_small_graph_equivalence(small_graph_decisions, report):
    rows, elapsed = small_graph_decisions
    wrong = [sorted(H.edges) for H, res, want in rows if res.drawable != want]
    unsound = [sorted(H.edges) for H, res, _ in rows if res.drawable and not verify(signed_complete(H), res.drawing).valid]
    ok = not wrong and not unsound and elapsed < 300
    report("2 small-graph equivalence", ok, f"{len(rows)} graphs, {len(wrong)} disagreements, {elapsed:.1f}s")
    assert ok, (wrong[:3], unsound[:3])


def test_generated_soundness(generated_runs, report):
    bad = [i for i, (G, res, _) in enumerate(generated_runs) if not res.drawable or verify(G, res.drawing).violations]
    slow = max(t for _, _, t in generated_runs)
    ok = not bad and slow < 1
    report("3 generated instances drawable and verified", ok, f"{len(generated_runs)} instances, {len(bad)} failures, slowest {slow:.2f}s")
    assert ok, bad[:5]


def _tie_suite():
    """Almost-valid drawings with ties at exactly the threshold."""
    G, D = tie_example()
    yield "three vertices", G, D, F(1, 4)
    yield "mirrored", G, Drawing({v: -p % 1 for v, p in D.positions.items()}), F(1, 4)
    # antipodal vertices 1 and 3 each tie a friend against an enemy, and so do 2 and 4
    G = SignedGraph(4, frozenset({(1, 2), (3, 4)}), frozenset({(1, 3), (1, 4), (2, 3), (2, 4)}))
    yield "antipodal double tie", G, Drawing({i: F(i - 1, 4) for i in range(1, 5)}), F(1, 4)
    for n in (6, 8, 11):
        pos = {(i, i % n + 1) for i in range(1, n + 1)} | {(1, 3), (4, 6)}
        G = SignedGraph.from_positive(plain(n, {tuple(sorted(p)) for p in pos}))
        yield f"{n}-gon with chords", G, Drawing({i: F(i - 1, n) for i in range(1, n + 1)}), F(2, n)
    rng = random.Random(2024)
    made = 0
    while made < 300:
        m = rng.randint(4, 30)
        n = rng.randint(3, min(m, 12))
        pts = rng.sample(range(m), n)
        delta = F(rng.randint(1, m // 2), m)
        D = Drawing({i + 1: F(p, m) for i, p in enumerate(pts)})
        pos, neg = set(), set()
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d = distance(D[i], D[j])
                r = rng.random()
                if d < delta or (d == delta and r < 0.5):
                    pos.add((i, j))
                elif d > delta or r < 0.9:
                    neg.add((i, j))
        G = SignedGraph(n, frozenset(pos), frozenset(neg))
        window = almost_valid_window(G, D)
        if window is None or not window[0] <= delta <= window[1]:
            continue
        made += 1
        yield f"random {made}", G, D, delta


def test_tie_repair(report):
    failures, cases, ties = [], 0, 0
    for name, G, D, delta in _tie_suite():
        cases += 1
        trace = repair_ties(G, D, delta)
        ties += trace.initial_ties
        order = cyclic_labeling(D)
        if (
            trace.steps > trace.initial_ties
            or not all(same_cyclic_order(cyclic_labeling(x), order) for x in trace.drawings)
            or not verify(G, trace.result).valid
        ):
            failures.append(name)
    ok = not failures
    report("4 tie repair", ok, f"{cases} drawings, {ties} initial ties, failures {failures[:3]}")
    assert ok


def test_equal_length_contract(small_graph_decisions, report):
    checked, bad = 0, []
    for H, res, _ in small_graph_decisions[0]:
        if not res.drawable:
            continue
        checked += 1
        out = equalize_lengths(res.proper_model)
        lengths = {a.length for a in out.model.arcs.values()}
        if lengths != {out.delta} or not pairwise_intersections_match(H, out.model):
            bad.append(sorted(H.edges))
    ok = not bad and checked > 0
    report("5 equal-length contract", ok, f"{checked} models, {len(bad)} failures")
    assert ok, bad[:3]


def test_round_trip(generated_runs, report):
    bad = []
    for i, (G, res, _) in enumerate(generated_runs):
        C = drawing_to_completion(G, res.drawing)
        CG = apply_completion(G, C)
        if not verify_model(positive_subgraph(CG), drawing_to_model(CG, res.drawing)):
            bad.append(i)
    ok = not bad
    report("6 round trip", ok, f"{len(generated_runs)} drawings, {len(bad)} failures")
    assert ok


def _drawable_base():
    for seed in range(100):
        G = gen_instance(seed, 12, "pca")
        res = decide_complete(G)
        if res.route == "equal-length" and len(G.neg_edges) >= 10 and len(G.pos_edges) >= 10:
            return G
    raise AssertionError("no base instance")


def _undrawable_base():
    """The net on 1..6 with six extra vertices; deletions never touch the net's own pairs."""
    rng = random.Random(6)
    pos = set(net().edges) | {(i, j) for i in range(7, 13) for j in range(i + 1, 13) if rng.random() < 0.5}
    return SignedGraph.from_positive(plain(12, pos))


def _delete(G, pairs):
    return SignedGraph(G.n, G.pos_edges - set(pairs), G.neg_edges - set(pairs))


def test_search_work(report):
    rng = random.Random(12)
    notes, ok = [], True
    base = _drawable_base()
    outside = [p for p in sorted(_undrawable_base().pos_edges | _undrawable_base().neg_edges) if p[1] > 6]
    bad_base = _undrawable_base()
    for k in range(1, 11):
        G = _delete(base, rng.sample(sorted(base.pos_edges | base.neg_edges), k))
        res = decide_general(G)
        ok &= res.drawable and res.examined <= 2**k and verify(G, res.drawing).valid
        H = _delete(bad_base, rng.sample(outside, k))
        res = decide_general(H)
        ok &= not res.drawable and res.examined == res.refuted == 2**k
    notes.append("n=12, k=1..10")
    rng = random.Random(13)
    disagreements = 0
    for _ in range(300):
        G = random_signed(rng, rng.randint(3, 6), rng.randint(0, 4))
        res = decide_general(G)
        disagreements += res.drawable != double_oracle(G)
        if not res.drawable:
            ok &= res.examined == 2**G.k
    ok &= disagreements == 0
    notes.append(f"300 small instances, {disagreements} disagreements")
    report("7 completion search work", ok, "; ".join(notes))
    assert ok


def test_determinism(tmp_path, report):
    digests = []
    for run in range(2):
        d = tmp_path / f"run{run}"
        d.mkdir()
        h = hashlib.sha256()
        for seed in (1, 7, 42):
            _run("gen", "--seed", str(seed), "--n", "20", "--mode", "pca", "-o", "g.txt", cwd=d)
            _run("draw", "g.txt", "-o", "d.txt", "--svg", "d.svg", "--model-svg", "m.svg", cwd=d)
            for name in ("g.txt", "d.txt", "d.svg", "m.svg"):
                h.update((d / name).read_bytes())
        digests.append(h.hexdigest())
    ok = digests[0] == digests[1]
    report("8 determinism", ok, f"sha256 {digests[0][:12]} vs {digests[1][:12]}")
    assert ok
