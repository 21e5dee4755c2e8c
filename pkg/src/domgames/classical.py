"""Domination number and total domination number by exhaustive search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .engine import IsolatedVertexError
from .graph import Graph, has_isolated


@dataclass(frozen=True)
class ClassicalResult:
    gamma: int
    gamma_t: int


def _min_cover(hoods: tuple[int, ...], full: int) -> int:
    # Smallest k such that some k of the masks cover `full`.
    n = len(hoods)
    for k in range(1, n + 1):
        for combo in combinations(hoods, k):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full:
                return k
    raise ValueError("no cover exists")


def domination_number(g: Graph) -> int:
    return _min_cover(tuple(g.closed_neighbors(v) for v in range(g.n)), g.vertices)


def total_domination_number(g: Graph) -> int:
    if has_isolated(g):
        raise IsolatedVertexError("total domination needs an isolate-free graph")
    return _min_cover(g.adj, g.vertices)


def classical(g: Graph) -> ClassicalResult:
    return ClassicalResult(domination_number(g), total_domination_number(g))
