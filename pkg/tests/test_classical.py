import itertools

import pytest

from domgames.classical import classical, domination_number, total_domination_number
from domgames.corpus import random_corpus, trees_up_to
from domgames.engine import IsolatedVertexError
from domgames.graph import Graph, bits, cycle, leafy_clique, path, star


def subset_oracle(g, hood):
    # Scan every subset in order of size; first one that covers V wins.
    verts = range(g.n)
    for k in range(g.n + 1):
        for sub in itertools.combinations(verts, k):
            covered = set()
            for v in sub:
                covered |= hood(v)
            if covered == set(verts):
                return k
    return None


def closed(g):
    return lambda v: set(bits(g.neighbors(v))) | {v}


def open_(g):
    return lambda v: set(bits(g.neighbors(v)))


@pytest.mark.parametrize(
    "g, gamma, gamma_t",
    [
        (path(2), 1, 2),
        (path(4), 2, 2),
        (path(7), 3, 4),
        (cycle(5), 2, 3),
        (star(5), 1, 2),
        (leafy_clique(3), 3, 3),
    ],
)
def test_known_values(g, gamma, gamma_t):
    assert classical(g).gamma == gamma
    assert classical(g).gamma_t == gamma_t


def test_against_subset_oracle():
    corpus = list(trees_up_to(9)) + random_corpus(150, 2, 10, seed=77)
    for g in corpus:
        assert domination_number(g) == subset_oracle(g, closed(g))
        assert total_domination_number(g) == subset_oracle(g, open_(g))


def test_total_domination_needs_isolate_free():
    with pytest.raises(IsolatedVertexError):
        total_domination_number(Graph(3, [0b10, 0b01, 0]))
    assert domination_number(Graph(3, [0b10, 0b01, 0])) == 2


def test_spec_examples():
    k2 = Graph.from_edges(2, [(0, 1)])
    assert classical(star(3)).gamma == 1
    assert classical(leafy_clique(2)).gamma == 2
    assert classical(leafy_clique(2)).gamma_t == 2
    assert classical(k2).gamma_t == 2
