import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgames.corpus import random_connected, random_corpus, trees_up_to
from domgames.engine import VARIANTS, IsolatedVertexError, Player, Variant, apply, is_terminal, new_state
from domgames.graph import Graph, cycle, leafy_clique, path
from domgames.solver import (
    Solver,
    StateLimitExceeded,
    brute_length,
    game_length,
    optimal_line,
)

D, S = Player.DOMINATOR, Player.STALLER
K2 = Graph.from_edges(2, [(0, 1)])


def dstart(g):
    return tuple(Solver(g, v).length() for v in VARIANTS)


def test_c5_values():
    assert dstart(cycle(5)) == (3, 3, 3, 3, 5)
    assert tuple(Solver(cycle(5), v).length(S) for v in VARIANTS) == (2, 2, 3, 4, 4)


def test_k2_values():
    assert dstart(K2) == (1, 1, 2, 2, 3)
    assert optimal_line(K2, Variant.LL) == [(D, 0), (S, 0), (D, 1)]


def test_predominated_example():
    assert game_length(path(3), Variant.LL, S, 0b101).length == 2


def test_leafy_clique_f2():
    assert dstart(leafy_clique(2)) == (2, 3, 3, 3, 3)


@pytest.mark.parametrize("variant", VARIANTS, ids=lambda v: v.label)
def test_memo_matches_brute_force(variant):
    rng = random.Random(variant.label)
    graphs = list(trees_up_to(6)) + random_corpus(40, 2, 6, seed=3)
    for g in graphs:
        solver = Solver(g, variant)
        for a in [0] + [rng.getrandbits(g.n) for _ in range(4)]:
            for starter in (D, S):
                assert solver.length(starter, a) == brute_length(g, variant, starter, a)


@pytest.mark.parametrize("variant", VARIANTS, ids=lambda v: v.label)
def test_normalization_and_pruning_do_not_change_values(variant):
    for seed in range(25):
        g = random_connected(8, seed)
        plain = Solver(g, variant, normalize=False)
        fast = Solver(g, variant, prune=True)
        ref = Solver(g, variant)
        for a in (0, 1, 0b1010):
            for starter in (D, S):
                x = ref.length(starter, a)
                assert plain.length(starter, a) == x
                assert fast.length(starter, a) == x


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1), st.sampled_from(VARIANTS))
def test_values_bounded_by_order(n, seed, variant):
    g = random_connected(n, seed)
    s = Solver(g, variant)
    for starter in (D, S):
        x = s.length(starter)
        assert 1 <= x <= n + (1 if variant is Variant.LL else 0)


def test_memo_shared_across_queries():
    s = Solver(cycle(6), Variant.D)
    s.length(D)
    size = len(s.memo)
    s.length(D)
    assert len(s.memo) == size
    other = Solver(cycle(6), Variant.D, memo=s.memo)
    assert other.length(S) == s.length(S)


def test_solve_reports_optimal_first_moves():
    res = Solver(path(3), Variant.D).solve()
    assert res.length == 1 and res.optimal_first_list == [1]
    res = Solver(cycle(5), Variant.D).solve()
    assert res.optimal_first_list == [0, 1, 2, 3, 4]
    assert res.states_visited > 0


@pytest.mark.parametrize("variant", VARIANTS, ids=lambda v: v.label)
def test_optimal_line_realises_value(variant):
    for seed in range(10):
        g = random_connected(7, seed)
        for starter in (D, S):
            line = optimal_line(g, variant, starter)
            assert len(line) == Solver(g, variant).length(starter)
            state = new_state(g, variant, 0, starter)
            for player, v in line:
                assert state.to_move is player
                state = apply(state, v)
            assert is_terminal(state)


def test_state_limit():
    with pytest.raises(StateLimitExceeded):
        Solver(path(12), Variant.D, max_states=10).length()


def test_isolated_vertices_rejected():
    with pytest.raises(IsolatedVertexError):
        Solver(Graph(3, [0b10, 0b01, 0]), Variant.D)
    with pytest.raises(IsolatedVertexError):
        brute_length(Graph(1, [0]), Variant.D)


def test_fig2_caterpillar():
    spine = [(i, i + 1) for i in range(6)]
    g = Graph.from_edges(11, spine + [(1, 7), (2, 8), (3, 9), (4, 10)])
    assert dstart(g) == (5, 6, 7, 8, 9)


def test_small_examples():
    k13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert Solver(k13, Variant.D).length(S) == 2
    assert brute_length(k13, Variant.D, S) == 2
    assert brute_length(K2, Variant.D) == 1
    assert game_length(leafy_clique(2), Variant.T).length == 3
    assert optimal_line(path(3), Variant.D) == [(D, 1)]
