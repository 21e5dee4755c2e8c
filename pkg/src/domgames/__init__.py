"""Exact solvers for domination games on graphs (D, T, Z, L and LL variants)."""

from .engine import VARIANTS, GameState, Player, Variant, apply, is_terminal, legal_moves, new_state
from .graph import Graph, parse_graph6, to_graph6
from .solver import SolveResult, Solver, brute_length, game_length, optimal_line

__all__ = [
    "VARIANTS",
    "GameState",
    "Graph",
    "Player",
    "SolveResult",
    "Solver",
    "Variant",
    "apply",
    "brute_length",
    "game_length",
    "is_terminal",
    "legal_moves",
    "new_state",
    "optimal_line",
    "parse_graph6",
    "to_graph6",
]
