"""Exact game lengths by memoized minimax.

The residual value of a position depends only on the covered set, the
(normalized) forbidden set and the player to move, so those three fields
form the memo key.  Move history and the move counter are not part of it.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .engine import (
    GameState,
    IsolatedVertexError,
    Player,
    Variant,
    apply,
    legal_moves,
    new_state,
)
from .graph import Graph, VertexSet, bits, has_isolated

DEFAULT_MAX_STATES = 20_000_000


class StateLimitExceeded(RuntimeError):
    """The memo table grew past its configured cap."""


@dataclass(frozen=True)
class SolveResult:
    length: int
    optimal_first: VertexSet
    states_visited: int

    @property
    def optimal_first_list(self) -> list[int]:
        return list(bits(self.optimal_first))


class Solver:
    """Memoized minimax for one graph and one variant.

    The memo table is independent of the starter and of the pre-dominated
    set, so one ``Solver`` answers every (starter, A) query on its graph.
    Pass ``memo`` to share a table between solvers of the same graph and
    variant; plain ``dict`` get/set are atomic, so concurrent writers can at
    worst duplicate work.

    ``normalize=False`` keeps raw played sets as the forbidden component of
    the key instead of folding in saturated vertices; it exists to check that
    the normalization does not change any value.

    ``prune=True`` stops scanning moves once a player has reached a proven
    bound (Dominator: the game ends next move; Staller: every remaining move
    covers a new vertex and all of them would be used).  Stored values stay
    exact.
    """

    def __init__(
        self,
        graph: Graph,
        variant: Variant,
        *,
        normalize: bool = True,
        prune: bool = False,
        max_states: int = DEFAULT_MAX_STATES,
        memo: dict[int, int] | None = None,
    ) -> None:
        if has_isolated(graph):
            raise IsolatedVertexError("graph has an isolated vertex")
        self.graph = graph
        self.variant = variant
        self.normalize = normalize
        self.prune = prune
        self.max_states = max_states
        self.memo: dict[int, int] = {} if memo is None else memo
        self._value = self._build()

    def _build(self):
        g = self.graph
        n = g.n
        full = g.vertices
        newness, coverage = self.variant.masks(g)
        closed = tuple(g.closed_neighbors(v) for v in range(n))
        no_repeat = self.variant.no_repeat
        normalize = self.normalize
        prune = self.prune
        # With open newness or closed coverage every legal move covers a new
        # vertex, so the number of uncovered vertices bounds the game.
        progressive = self.variant in (Variant.D, Variant.T, Variant.Z)
        memo = self.memo
        max_states = self.max_states
        vertices = range(n)

        def children(c: int, f: int, dominator: bool) -> list[tuple[int, int]]:
            unc = full & ~c
            if not no_repeat:
                out = {c | coverage[v] for v in vertices if newness[v] & unc}
                if dominator:
                    # A Dominator move that covers nothing can be answered by
                    # Staller replaying it, so it is never optimal (LL only).
                    out.discard(c)
                return [(nc, 0) for nc in out]
            seen = set()
            for v in vertices:
                if f >> v & 1 or not newness[v] & unc:
                    continue
                nc = c | coverage[v]
                nf = f | (1 << v)
                if normalize:
                    gained = nc & ~c
                    cand = 0
                    while gained:
                        low = gained & -gained
                        cand |= closed[low.bit_length() - 1]
                        gained ^= low
                    cand &= ~nf
                    while cand:
                        low = cand & -cand
                        if not closed[low.bit_length() - 1] & ~nc:
                            nf |= low
                        cand ^= low
                seen.add((nc, nf))
            return list(seen)

        def value(c: int, f: int, dominator: bool) -> int:
            key = ((c << n | f) << 1) | dominator
            r = memo.get(key)
            if r is not None:
                return r
            kids = children(c, f, dominator)
            if not kids:
                r = 0
            elif dominator:
                best = None
                for nc, nf in kids:
                    x = value(nc, nf, False)
                    if best is None or x < best:
                        best = x
                        if prune and x == 0:
                            break
                r = 1 + best
            else:
                cap = bin(full & ~c).count("1") - 1 if prune and progressive else -1
                best = -1
                for nc, nf in kids:
                    x = value(nc, nf, True)
                    if x > best:
                        best = x
                        if best == cap:
                            break
                r = 1 + best
            memo[key] = r
            if len(memo) > max_states:
                raise StateLimitExceeded(
                    f"memo table exceeded {max_states} states on n={n}"
                )
            return r

        return value

    # -- public API ---------------------------------------------------------

    def state_value(self, state: GameState) -> int:
        """Residual game length from ``state`` under optimal play."""
        need = 2 * state.graph.n + 100
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need)
        return self._value(
            state.covered, state.forbidden, state.to_move is Player.DOMINATOR
        )

    def move_values(self, state: GameState) -> dict[int, int]:
        """Total remaining length after each legal move (including that move).

        Dominator moves that cover nothing are omitted (never optimal).
        """
        out = {}
        for v in bits(legal_moves(state)):
            child = apply(state, v)
            if (
                state.to_move is Player.DOMINATOR
                and not self.variant.no_repeat
                and child.covered == state.covered
            ):
                continue
            out[v] = 1 + self.state_value(child)
        return out

    def solve_state(self, state: GameState) -> SolveResult:
        before = len(self.memo)
        moves = self.move_values(state)
        if not moves:
            return SolveResult(0, 0, len(self.memo) - before)
        pick = min if state.to_move is Player.DOMINATOR else max
        length = pick(moves.values())
        best = 0
        for v, x in moves.items():
            if x == length:
                best |= 1 << v
        return SolveResult(length, best, len(self.memo) - before)

    def solve(
        self, starter: Player = Player.DOMINATOR, predominated: VertexSet = 0
    ) -> SolveResult:
        return self.solve_state(new_state(self.graph, self.variant, predominated, starter))

    def length(self, starter: Player = Player.DOMINATOR, predominated: VertexSet = 0) -> int:
        return self.state_value(new_state(self.graph, self.variant, predominated, starter))

    def optimal_line(
        self, starter: Player = Player.DOMINATOR, predominated: VertexSet = 0
    ) -> list[tuple[Player, int]]:
        state = new_state(self.graph, self.variant, predominated, starter)
        line = []
        while True:
            res = self.solve_state(state)
            if res.length == 0:
                return line
            v = (res.optimal_first & -res.optimal_first).bit_length() - 1
            line.append((state.to_move, v))
            state = apply(state, v)


def game_length(
    g: Graph,
    variant: Variant,
    starter: Player = Player.DOMINATOR,
    predominated: VertexSet = 0,
    **options,
) -> SolveResult:
    return Solver(g, variant, **options).solve(starter, predominated)


def optimal_line(
    g: Graph,
    variant: Variant,
    starter: Player = Player.DOMINATOR,
    predominated: VertexSet = 0,
    **options,
) -> list[tuple[Player, int]]:
    return Solver(g, variant, **options).optimal_line(starter, predominated)


_UNBOUNDED = 10**9


def brute_length(
    g: Graph,
    variant: Variant,
    starter: Player = Player.DOMINATOR,
    predominated: VertexSet = 0,
) -> int:
    """Game length by iterative deepening over move histories.

    Deliberately shares nothing with :class:`Solver`: vertex sets are
    frozensets, legality is re-evaluated from the full history, there is no
    memo table and no forbidden-set normalization.  Dominator's moves that
    cover nothing are explored too.  The value is the least ``k`` such that
    Dominator can force the game to end within ``k`` moves; each ``k`` is
    decided by a plain AND-OR search.  Intended for n <= 8.
    """
    if has_isolated(g):
        raise IsolatedVertexError("graph has an isolated vertex")
    n = g.n
    verts = range(n)
    open_nb = [frozenset(bits(g.neighbors(v))) for v in verts]
    closed_nb = [open_nb[v] | {v} for v in verts]
    new_hood = closed_nb if variant.newness == "closed" else open_nb
    cov_hood = closed_nb if variant.coverage == "closed" else open_nb
    reach = max(len(h) for h in cov_hood)
    base = frozenset(bits(predominated))
    everything = frozenset(verts)

    def covered_by(history: tuple[int, ...]) -> frozenset[int]:
        covered = set(base)
        for u in history:
            covered |= cov_hood[u]
        return frozenset(covered)

    def legal(history: tuple[int, ...], covered: frozenset[int]) -> list[int]:
        return [
            v
            for v in verts
            if not (variant.no_repeat and v in history) and new_hood[v] - covered
        ]

    def forces(history: tuple[int, ...], dominator: bool, budget: int) -> bool:
        # Can Dominator end the game within `budget` further moves?
        covered = covered_by(history)
        moves = legal(history, covered)
        if not moves:
            return True
        if budget * reach < len(everything - covered):
            return False
        gain = {v: len(cov_hood[v] - covered) for v in moves}
        if dominator:
            moves.sort(key=lambda v: -gain[v])
            return any(forces(history + (v,), False, budget - 1) for v in moves)
        moves.sort(key=lambda v: gain[v])
        return all(forces(history + (v,), True, budget - 1) for v in moves)

    dominator_first = starter is Player.DOMINATOR
    for k in range(2 * n + 2):
        if forces((), dominator_first, k):
            return k
    return _UNBOUNDED
