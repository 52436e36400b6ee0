import random
from fractions import Fraction as F
from itertools import product

import pytest

from conftest import complete, double_oracle, net, random_signed, signed_complete, square, square_drawing
from scfe import (
    Drawing,
    DrawingError,
    PreconditionError,
    SearchLimitError,
    SignedGraph,
    decide_complete,
    decide_general,
    gen_instance,
    is_valid_drawing,
    verify,
)
from scfe.graph import missing_pairs


def test_net_is_not_drawable():
    res = decide_complete(signed_complete(net()))
    assert not res.drawable and res.drawing is None and res.examined == 1


def test_square_is_drawable():
    res = decide_complete(square())
    assert res.drawable and is_valid_drawing(square(), res.drawing)
    assert res.route == "equal-length" and res.equal_length is not None


def test_all_positive_short_circuit():
    res = decide_complete(signed_complete(complete(6)))
    assert res.drawable and res.route == "trivial"


def test_decide_complete_rejects_incomplete():
    with pytest.raises(PreconditionError):
        decide_complete(SignedGraph(3))


def test_deleted_edge():
    sq = square()
    G = SignedGraph(4, sq.pos_edges, sq.neg_edges - {(1, 3)})
    res = decide_general(G)
    assert res.drawable and res.examined <= 2 and is_valid_drawing(G, res.drawing)


def test_net_minus_pendant_edge_matches_oracle():
    full = signed_complete(net())
    G = SignedGraph(6, full.pos_edges - {(1, 4)}, full.neg_edges)
    res = decide_general(G, exhaustive=True)
    assert res.examined == 2
    assert res.drawable == double_oracle(G)


def test_complete_input_examines_once():
    assert decide_general(square()).examined == 1


def test_search_ceiling():
    with pytest.raises(SearchLimitError):
        decide_general(SignedGraph(8), max_k=10)


def test_double_oracle_every_small_instance():
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    for signs in product("+-.", repeat=len(pairs)):
        if signs.count(".") > 4:
            continue
        G = SignedGraph(4, frozenset(p for p, s in zip(pairs, signs) if s == "+"), frozenset(p for p, s in zip(pairs, signs) if s == "-"))
        res = decide_general(G)
        assert res.drawable == double_oracle(G), signs
        if res.drawable:
            assert is_valid_drawing(G, res.drawing)
        else:
            assert res.examined == res.refuted == 2 ** G.k


def test_double_oracle_random():
    rng = random.Random(11)
    for _ in range(150):
        G = random_signed(rng, rng.choice((5, 6)), rng.randint(0, 4))
        res = decide_general(G)
        assert res.drawable == double_oracle(G)
        assert res.examined <= 2 ** G.k or G.k == 0


def test_exhaustive_counts():
    G = SignedGraph(3, frozenset({(1, 2)}))
    res = decide_general(G, exhaustive=True)
    assert res.examined == 4 and res.drawable_completions == 4 and res.refuted == 0


def test_subgraph_heredity():
    rng = random.Random(2)
    for seed in range(20):
        G = gen_instance(seed, 10, "pca")
        D = decide_complete(G).drawing
        for _ in range(5):
            pos = {p for p in G.pos_edges if rng.random() < 0.7}
            neg = {p for p in G.neg_edges if rng.random() < 0.7}
            assert verify(SignedGraph(G.n, frozenset(pos), frozenset(neg)), D).valid


def test_verify_reports():
    rep = verify(square(), square_drawing())
    assert rep.valid and rep.violations == () and rep.window == (F(1, 4), F(1, 2))
    swapped = Drawing({1: F(0), 2: F(1, 2), 3: F(1, 4), 4: F(3, 4)})
    rep = verify(square(), swapped)
    assert not rep.valid and rep.violations
    assert rep.lines()[0] == "valid: no" and any(line.startswith("violation:") for line in rep.lines())
    with pytest.raises(DrawingError):
        verify(square(), Drawing({1: F(0), 2: F(1, 4), 3: F(1, 2)}))


def test_margin_route():
    from conftest import NO_COMMON_LENGTH

    G = signed_complete(NO_COMMON_LENGTH)
    res = decide_complete(G)
    assert res.drawable and res.route == "margin" and verify(G, res.drawing).valid


def test_missing_pairs_order_drives_search():
    G = SignedGraph(4, frozenset({(1, 2), (3, 4)}), frozenset({(1, 3), (2, 4)}))
    res = decide_general(G)
    assert res.completion is not None
    assert [p for p, _ in res.completion] == missing_pairs(G)
