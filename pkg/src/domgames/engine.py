"""Rules shared by the five domination games.

Every variant is described by three switches:

* ``newness``   which neighborhood of a candidate vertex must still contain
  an uncovered vertex for the move to be legal;
* ``coverage``  which neighborhood of a played vertex becomes covered;
* ``no_repeat`` whether a vertex may be played at most once.

A pre-dominated set simply seeds the covered set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .graph import Graph, VertexSet, bits, has_isolated


class IllegalMoveError(ValueError):
    """A vertex that is not a legal move was played."""


class IsolatedVertexError(ValueError):
    """Games are only defined on isolate-free graphs here."""


class Player(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def other(self) -> "Player":
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR

    @property
    def short(self) -> str:
        return "D" if self is Player.DOMINATOR else "S"

    @classmethod
    def parse(cls, text: str) -> "Player":
        t = text.strip().lower()
        if t in ("d", "dominator"):
            return cls.DOMINATOR
        if t in ("s", "staller"):
            return cls.STALLER
        raise ValueError(f"unknown player {text!r}")


CLOSED = "closed"
OPEN = "open"


class Variant(enum.Enum):
    """The five games as (newness, coverage, no_repeat)."""

    D = (CLOSED, CLOSED, False)
    T = (OPEN, OPEN, False)
    Z = (OPEN, CLOSED, False)
    L = (CLOSED, OPEN, True)
    LL = (CLOSED, OPEN, False)

    @property
    def newness(self) -> str:
        return self.value[0]

    @property
    def coverage(self) -> str:
        return self.value[1]

    @property
    def no_repeat(self) -> bool:
        return self.value[2]

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, text: str) -> "Variant":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown variant {text!r}; use d, t, z, l or ll") from None

    def masks(self, g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Per-vertex (newness, coverage) neighborhood masks on ``g``."""
        closed = tuple(g.closed_neighbors(v) for v in range(g.n))
        newness = closed if self.newness == CLOSED else g.adj
        coverage = closed if self.coverage == CLOSED else g.adj
        return newness, coverage


# Order used throughout reports: Z, D, T, L, LL.
VARIANTS = (Variant.Z, Variant.D, Variant.T, Variant.L, Variant.LL)


def saturated(g: Graph, covered: VertexSet) -> VertexSet:
    """Vertices whose closed neighborhood is entirely covered."""
    out = 0
    for v in range(g.n):
        if not g.closed_neighbors(v) & ~covered:
            out |= 1 << v
    return out


@dataclass(frozen=True)
class GameState:
    graph: Graph = field(repr=False)
    variant: Variant
    covered: VertexSet
    forbidden: VertexSet
    to_move: Player
    moves_made: int = 0

    @property
    def uncovered(self) -> VertexSet:
        return self.graph.vertices & ~self.covered


def new_state(
    g: Graph,
    variant: Variant,
    predominated: VertexSet = 0,
    starter: Player = Player.DOMINATOR,
) -> GameState:
    if has_isolated(g):
        raise IsolatedVertexError("graph has an isolated vertex")
    if predominated & ~g.vertices:
        raise ValueError("predominated set is not a subset of V(G)")
    forbidden = saturated(g, predominated) if variant.no_repeat else 0
    return GameState(g, variant, predominated, forbidden, starter, 0)


def _newness(state: GameState, v: int) -> VertexSet:
    g = state.graph
    return g.closed_neighbors(v) if state.variant.newness == CLOSED else g.neighbors(v)


def _coverage(state: GameState, v: int) -> VertexSet:
    g = state.graph
    return g.closed_neighbors(v) if state.variant.coverage == CLOSED else g.neighbors(v)


def is_legal(state: GameState, v: int) -> bool:
    if not 0 <= v < state.graph.n:
        return False
    if state.forbidden >> v & 1:
        return False
    return bool(_newness(state, v) & ~state.covered)


def legal_moves(state: GameState) -> VertexSet:
    out = 0
    for v in range(state.graph.n):
        if is_legal(state, v):
            out |= 1 << v
    return out


def illegal_reason(state: GameState, v: int) -> str | None:
    """Human-readable reason why ``v`` cannot be played, or None if legal."""
    g = state.graph
    if not 0 <= v < g.n:
        return f"vertex {v} is not in the graph (0..{g.n - 1})"
    if not _newness(state, v) & ~state.covered:
        hood = "N[v]" if state.variant.newness == CLOSED else "N(v)"
        return f"{hood} of vertex {v} is already covered"
    if state.forbidden >> v & 1:
        return f"vertex {v} was already played"
    return None


def apply(state: GameState, v: int) -> GameState:
    reason = illegal_reason(state, v)
    if reason is not None:
        raise IllegalMoveError(reason)
    covered = state.covered | _coverage(state, v)
    forbidden = state.forbidden
    if state.variant.no_repeat:
        forbidden |= (1 << v) | saturated(state.graph, covered)
    return replace(
        state,
        covered=covered,
        forbidden=forbidden,
        to_move=state.to_move.other,
        moves_made=state.moves_made + 1,
    )


def is_terminal(state: GameState) -> bool:
    return legal_moves(state) == 0


def format_set(mask: VertexSet) -> str:
    return "{" + ", ".join(str(v) for v in bits(mask)) + "}"
