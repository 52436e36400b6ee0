from fractions import Fraction as F
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_labelled, atlas, complete, cycle, net, path, plain
from scfe import Arc, ArcModel, EndpointWord, PlainGraph, PreconditionError
from scfe import intersection_graph, oracle_pca, oracle_word, recognize_pca, verify_model
from scfe.consecutive import circular_ones, consecutive_ones, is_consecutive
from scfe.orientation import transitive_orientation


def _c1p_brute(ground, sets, cyclic):
    for order in permutations(ground):
        if all(is_consecutive(order, s, cyclic) for s in sets):
            return True
    return False


families = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.sets(st.integers(1, n), min_size=1), max_size=6).map(lambda s: (list(range(1, n + 1)), s))
)


@settings(max_examples=300)
@given(families)
def test_consecutive_ones_matches_brute_force(data):
    ground, sets = data
    order = consecutive_ones(ground, sets)
    assert (order is not None) == _c1p_brute(ground, sets, False)
    if order is not None:
        assert sorted(order) == ground and all(is_consecutive(order, s) for s in sets)


@settings(max_examples=300)
@given(families)
def test_circular_ones_matches_brute_force(data):
    ground, sets = data
    order = circular_ones(ground, sets)
    assert (order is not None) == _c1p_brute(ground, sets, True)
    if order is not None:
        assert all(is_consecutive(order, s, cyclic=True) for s in sets)


def _transitive(arcs):
    succ = {}
    for a, b in arcs:
        succ.setdefault(a, set()).add(b)
    return all(succ.get(b, set()) <= succ[a] for a, b in arcs)


def test_transitive_orientation_on_small_graphs():
    for H in atlas(6):
        adj = H.adjacency()
        arcs = transitive_orientation(adj)
        brute = None
        edges = sorted(H.edges)
        if len(edges) <= 10:
            brute = any(
                _transitive({(a, b) if bit else (b, a) for bit, (a, b) in zip(bits, edges)})
                for bits in product((0, 1), repeat=len(edges))
            )
        if arcs is not None:
            assert len(arcs) == len(edges) and _transitive(arcs)
            assert {tuple(sorted(a)) for a in arcs} == set(edges)
        if brute is not None:
            assert (arcs is not None) == brute


def test_examples():
    assert not recognize_pca(net())
    res = recognize_pca(cycle(5))
    assert res and intersection_graph(res.model) == cycle(5)
    assert recognize_pca(complete(1)) and recognize_pca(complete(6))
    assert recognize_pca(PlainGraph(0))


def test_oracle_examples():
    assert not oracle_pca(net())
    assert oracle_pca(PlainGraph(3))
    assert oracle_pca(path(4))
    with pytest.raises(PreconditionError):
        oracle_pca(PlainGraph(8))


def test_oracle_word_realizes_graph():
    for H in atlas(5):
        word = oracle_word(H)
        if word is not None:
            assert verify_model(H, word.to_model())


def test_verify_model_examples():
    c4 = ArcModel({i + 1: Arc(F(i, 4), F(3, 10)) for i in range(4)})
    assert verify_model(cycle(4), c4)
    assert not verify_model(cycle(4), ArcModel({i: Arc(F(i, 5), F(1, 10)) for i in range(1, 5)}))
    nested = ArcModel({1: Arc(F(0), F(1, 2)), 2: Arc(F(1, 10), F(1, 10))})
    assert not verify_model(plain(2, [(1, 2)]), nested)
    with pytest.raises(PreconditionError):
        verify_model(cycle(5), c4)


def test_agrees_with_oracle_on_all_labelled_graphs_up_to_five():
    for n in range(1, 6):
        for H in all_labelled(n):
            res = recognize_pca(H)
            assert bool(res) == oracle_pca(H), sorted(H.edges)
            if res:
                assert verify_model(H, res.model)


def test_agrees_with_oracle_on_atlas_up_to_seven():
    for H in atlas(7):
        res = recognize_pca(H)
        assert bool(res) == oracle_pca(H), (H.n, sorted(H.edges))


def test_endpoints_distinct_and_word_consistent():
    for H in atlas(6):
        res = recognize_pca(H)
        if not res:
            continue
        ends = [a.start for a in res.model.arcs.values()] + [a.end for a in res.model.arcs.values()]
        assert len(set(ends)) == 2 * H.n
        assert res.word.same_cyclic_order()


def test_endpoint_word_validation():
    with pytest.raises(PreconditionError):
        EndpointWord((("L", 1), ("L", 2), ("L", 3), ("R", 1), ("R", 3), ("R", 2)))
    with pytest.raises(PreconditionError):
        EndpointWord((("L", 1), ("R", 1), ("L", 1), ("R", 2)))
    EndpointWord((("L", 1), ("L", 2), ("L", 3), ("R", 1), ("R", 2), ("R", 3)))


def test_rotation_reflection_and_deletion():
    for H in atlas(6):
        res = recognize_pca(H)
        if not res or H.n < 2:
            continue
        M = res.model
        assert verify_model(H, M.rotated(F(2, 7))) and verify_model(H, M.mirrored())
        for v in H.vertices:
            sub, _ = H.induced([u for u in H.vertices if u != v])
            assert verify_model(sub, M.without(v))


def test_disconnected_inputs():
    two_paths = plain(6, [(1, 2), (2, 3), (4, 5), (5, 6)])
    assert recognize_pca(two_paths)
    # a cycle plus an isolated vertex cannot leave room for the extra arc
    assert bool(recognize_pca(plain(5, [(1, 2), (2, 3), (3, 4), (1, 4)]))) == oracle_pca(
        plain(5, [(1, 2), (2, 3), (3, 4), (1, 4)])
    )
    claw_free_star = plain(4, [(1, 2), (1, 3), (1, 4)])
    assert not recognize_pca(claw_free_star)


def test_large_random_models_are_recognized():
    import random

    from scfe.generate import random_equal_model

    rng = random.Random(7)
    for _ in range(40):
        H = intersection_graph(random_equal_model(rng, rng.randint(10, 40)))
        res = recognize_pca(H)
        assert res and verify_model(H, res.model)
