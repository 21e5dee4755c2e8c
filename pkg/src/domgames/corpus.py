"""Test corpora: all free trees of an order, and seeded random connected graphs.

Free trees come from the Wright-Richmond-Odlyzko-McKay successor algorithm
on level sequences: each free tree appears once, rooted at its center (or
bicenter), with vertices numbered in preorder of that canonical rooting.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, TextIO

from .graph import Graph, bits, to_graph6

MAX_TREE_ORDER = 18


def _level_sequence_to_graph(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, lv in enumerate(levels):
        while stack and levels[stack[-1]] >= lv:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a rooted level sequence."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = list(levels)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Left subtree of the root (re-levelled) and the rest of the tree."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [lv - 1 for lv in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _is_canonical_free(levels: list[int]) -> tuple[bool, int]:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    if rh < lh:
        return False, len(left)
    if rh == lh and (len(left) > len(rest) or (len(left) == len(rest) and left > rest)):
        return False, len(left)
    return True, len(left)


def _free_tree_sequences(n: int) -> Iterator[list[int]]:
    if n <= 2:
        yield list(range(n))
        return
    # Path rooted at its center: the first sequence in the order.
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        ok, p = _is_canonical_free(levels)
        if not ok:
            jumped = _next_rooted(levels, p)
            if jumped is None:
                return
            if levels[p] > 2:
                left, _ = _split(jumped)
                tail = list(range(1, max(left) + 2))
                jumped[-len(tail):] = tail
            levels = jumped
            continue
        yield levels
        levels = _next_rooted(levels)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Yield every free tree on ``n`` vertices exactly once (1 <= n <= 18)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}, got {n}")
    for levels in _free_tree_sequences(n):
        yield _level_sequence_to_graph(levels)


def trees_up_to(n_max: int, n_min: int = 2) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_trees(n)


def tree_centers(g: Graph) -> list[int]:
    remaining = g.vertices
    degree = [bin(nb).count("1") for nb in g.adj]
    while bin(remaining).count("1") > 2:
        leaves = [v for v in bits(remaining) if degree[v] <= 1]
        for v in leaves:
            remaining &= ~(1 << v)
            for u in bits(g.adj[v] & remaining):
                degree[u] -= 1
    return list(bits(remaining))


def tree_canonical_form(g: Graph) -> str:
    """Isomorphism invariant string for a tree (AHU encoding from its center)."""
    if g.num_edges() != g.n - 1:
        raise ValueError("not a tree")

    def encode(v: int, parent: int) -> str:
        kids = sorted(encode(u, v) for u in bits(g.adj[v]) if u != parent)
        return "(" + "".join(kids) + ")"

    return min(encode(c, -1) for c in tree_centers(g))


def random_connected(n: int, seed: int, p: float = 0.3) -> Graph:
    """Random spanning tree plus Bernoulli(p) extra edges, reproducible per seed."""
    if n < 2:
        raise ValueError("random_connected needs n >= 2")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_corpus(count: int, n_min: int, n_max: int, seed: int, p: float = 0.3) -> list[Graph]:
    rng = random.Random(seed)
    return [
        random_connected(rng.randint(n_min, n_max), rng.randrange(2**32), p)
        for _ in range(count)
    ]


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(to_graph6(g) + "\n")
        count += 1
    return count


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    from .graph import parse_graph6

    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield parse_graph6(line)
