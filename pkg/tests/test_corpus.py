import heapq
import io
import itertools

import networkx as nx
import pytest

from domgames.corpus import (
    enumerate_trees,
    random_connected,
    random_corpus,
    read_graph6,
    tree_canonical_form,
    trees_up_to,
    write_graph6,
)
from domgames.graph import Graph, is_connected

# OEIS A000055, number of free trees on n vertices.
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867]


def rooted_form(adj: dict[int, list[int]], root: int) -> tuple:
    # Nested sorted tuples; minimum over all roots is an isomorphism invariant.
    def go(v, parent):
        return tuple(sorted(go(u, v) for u in adj[v] if u != parent))

    return go(root, -1)


def oracle_form(n: int, edges) -> tuple:
    adj = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return min(rooted_form(adj, r) for r in range(n))


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def prufer_classes(n: int) -> set[tuple]:
    return {oracle_form(n, prufer_decode(seq, n)) for seq in itertools.product(range(n), repeat=n - 2)}


def enumerated_forms(n: int) -> list[tuple]:
    return [oracle_form(t.n, t.edges()) for t in enumerate_trees(n)]


@pytest.mark.parametrize("n", range(3, 9))
def test_enumeration_matches_prufer_oracle(n):
    forms = enumerated_forms(n)
    assert len(forms) == len(set(forms))
    assert set(forms) == prufer_classes(n)


def test_enumeration_matches_leaf_growth_oracle_to_11():
    level = {oracle_form(1, [])}
    level_edges = {oracle_form(1, []): []}
    for n in range(2, 12):
        grown = {}
        for edges in level_edges.values():
            for v in range(n - 1):
                new = edges + [(v, n - 1)]
                grown.setdefault(oracle_form(n, new), new)
        level_edges = grown
        level = set(grown)
        forms = enumerated_forms(n)
        assert len(forms) == len(set(forms)) == FREE_TREE_COUNTS[n - 1]
        assert set(forms) == level


@pytest.mark.parametrize("n", range(1, 15))
def test_tree_counts(n):
    assert sum(1 for _ in enumerate_trees(n)) == FREE_TREE_COUNTS[n - 1]


def test_enumerated_graphs_are_trees():
    for t in trees_up_to(10, n_min=1):
        assert t.num_edges() == t.n - 1
        assert is_connected(t)


def test_canonical_form_agrees_with_isomorphism():
    trees = list(enumerate_trees(8))
    forms = [tree_canonical_form(t) for t in trees]
    assert len(set(forms)) == len(trees)
    for t in trees:
        perm = list(range(t.n))[::-1]
        shuffled = Graph.from_edges(t.n, [(perm[a], perm[b]) for a, b in t.edges()])
        assert tree_canonical_form(shuffled) == tree_canonical_form(t)
    with pytest.raises(ValueError):
        tree_canonical_form(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_trees(0))
    with pytest.raises(ValueError):
        list(enumerate_trees(19))


def test_random_connected_is_reproducible_and_connected():
    for seed in range(50):
        g = random_connected(9, seed)
        assert g == random_connected(9, seed)
        assert is_connected(g)
    assert random_connected(9, 1) != random_connected(9, 2)
    assert random_connected(6, 3, p=0.0).num_edges() == 5
    assert random_connected(6, 3, p=1.0).num_edges() == 15
    with pytest.raises(ValueError):
        random_connected(1, 0)


def test_random_corpus_sizes():
    corpus = random_corpus(200, 2, 9, seed=2024)
    assert corpus == random_corpus(200, 2, 9, seed=2024)
    assert all(2 <= g.n <= 9 and is_connected(g) for g in corpus)
    assert {g.n for g in corpus} == set(range(2, 10))
    ref = [nx.Graph(g.edges()) for g in corpus]
    assert all(nx.is_connected(h) for h in ref)


def test_graph6_file_round_trip():
    trees = list(trees_up_to(7))
    buf = io.StringIO()
    assert write_graph6(trees, buf) == len(trees)
    text = "# comment\n\n" + buf.getvalue()
    assert list(read_graph6(io.StringIO(text))) == trees
