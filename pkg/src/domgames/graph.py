"""Immutable simple graphs with bitmask neighborhoods.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is
in the set.  A :class:`Graph` stores the open neighborhood of every vertex as
such a mask, which keeps every game rule a handful of integer operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

VertexSet = int


class GraphError(ValueError):
    """Invalid graph construction."""


class VertexCapError(GraphError):
    """The requested graph would exceed the vertex cap."""


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6HeaderError(Graph6Error):
    """The size header is missing or malformed."""


class Graph6LengthError(Graph6Error):
    """The body is truncated or followed by trailing garbage."""


class Graph6CapError(Graph6Error):
    """The encoded order exceeds the vertex cap."""


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighborhood N(v) as a bitmask.  Instances are
    immutable and hashable; equality compares the labelled edge set.
    """

    __slots__ = ("_n", "_adj", "_labels", "_hash")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        labels: Sequence[str] | None = None,
        *,
        cap: int = MAX_VERTICES,
    ) -> None:
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if n > cap:
            raise VertexCapError(f"{n} vertices exceeds the cap of {cap}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if labels is not None and len(labels) != n:
            raise GraphError("labels must name every vertex")
        self._n = n
        self._adj = tuple(adj)
        self._labels = tuple(labels) if labels is not None else None
        self._hash = hash((n, self._adj))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        *,
        cap: int = MAX_VERTICES,
    ) -> "Graph":
        if n > cap:
            raise VertexCapError(f"{n} vertices exceeds the cap of {cap}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels, cap=cap)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def vertices(self) -> VertexSet:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> VertexSet:
        """N(v)."""
        return self._adj[v]

    def closed_neighbors(self, v: int) -> VertexSet:
        """N[v] = N(v) plus v itself."""
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self._adj) // 2

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def relabel(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self._n, self._adj, labels, cap=max(self._n, MAX_VERTICES))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def __getstate__(self):
        return (self._n, self._adj, self._labels)

    def __setstate__(self, state) -> None:
        n, adj, labels = state
        self._n = n
        self._adj = adj
        self._labels = labels
        self._hash = hash((n, adj))


# -- graph6 -----------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 short form (no ``>>graph6<<`` header)."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    adj = g.adj
    chunk = 0
    filled = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6(text: str, *, cap: int = MAX_VERTICES) -> Graph:
    """Decode a graph6 string.

    Raises :class:`Graph6HeaderError`, :class:`Graph6LengthError` or
    :class:`Graph6CapError` depending on what is wrong with ``text``.
    """
    s = text.strip()
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise Graph6HeaderError(f"character outside the graph6 range in {s!r}")
    if codes[0] != 63:
        n = codes[0]
        body = codes[1:]
    elif len(codes) >= 4 and codes[1] != 63:
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        if n <= 62:
            raise Graph6HeaderError(f"long-form header used for n={n}")
        body = codes[4:]
    else:
        raise Graph6HeaderError(f"unsupported or truncated size header in {s!r}")
    if n < 1:
        raise Graph6HeaderError("graph6 string encodes an empty graph")
    if n > cap:
        raise Graph6CapError(f"graph6 order {n} exceeds the cap of {cap}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6LengthError(
            f"expected {expected} body characters for n={n}, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6LengthError("nonzero padding bits")
    return Graph(n, adj, cap=cap)


# -- constructions ----------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star(k: int) -> Graph:
    """K_{1,k} with center 0 and leaves 1..k."""
    if k < 1:
        raise GraphError("star needs k >= 1")
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def leafy_clique(n: int) -> Graph:
    """K_n with n pendant leaves on every clique vertex.

    Clique vertices are 0..n-1; the leaves of clique vertex ``i`` are
    ``n + i*n .. n + i*n + n - 1``.
    """
    if n < 2:
        raise GraphError("leafy_clique needs n >= 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, n + i * n + j) for i in range(n) for j in range(n)]
    return Graph.from_edges(n * (n + 1), edges)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "leafy_clique": leafy_clique,
}


def construct_family(family: str, param: int) -> Graph:
    try:
        build = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    return build(param)


def cartesian_product(g: Graph, h: Graph, *, cap: int = MAX_VERTICES) -> Graph:
    """G □ H with vertex (i, j) at index ``i * n(h) + j``."""
    m = h.n
    n = g.n * m
    if n > cap:
        raise VertexCapError(f"product has {n} vertices, cap is {cap}")
    edges = []
    for i in range(g.n):
        for a, b in h.edges():
            edges.append((i * m + a, i * m + b))
    for a, b in g.edges():
        for j in range(m):
            edges.append((a * m + j, b * m + j))
    return Graph.from_edges(n, edges, cap=cap)


def y_corona(g: Graph, *, cap: int = MAX_VERTICES) -> Graph:
    """Attach a private spider S(K_{1,3}) to every vertex of ``g`` by its center.

    Original vertices keep their indices.  Vertex ``v`` gets supports
    ``n + 6v + {0, 1, 2}`` and leaves ``n + 6v + {3, 4, 5}``, leaf ``3 + j``
    hanging from support ``j``.
    """
    n = g.n
    total = 7 * n
    if total > cap:
        raise VertexCapError(f"y_corona has {total} vertices, cap is {cap}")
    edges = list(g.edges())
    for v in range(n):
        base = n + 6 * v
        for j in range(3):
            edges.append((v, base + j))
            edges.append((base + j, base + 3 + j))
    return Graph.from_edges(total, edges, cap=cap)


def disjoint_union(*graphs: Graph, cap: int = MAX_VERTICES) -> Graph:
    if not graphs:
        raise GraphError("disjoint_union needs at least one graph")
    total = sum(g.n for g in graphs)
    if total > cap:
        raise VertexCapError(f"union has {total} vertices, cap is {cap}")
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(nb << offset for nb in g.adj)
        offset += g.n
    return Graph(total, adj, cap=cap)


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    remaining = g.vertices
    out = []
    adj = g.adj
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= adj[v]
            frontier = grown & ~seen
            seen |= frontier
        out.append(seen)
        remaining &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def has_isolated(g: Graph) -> bool:
    return any(nb == 0 for nb in g.adj)


def induced_subgraph(g: Graph, vertices: VertexSet) -> Graph:
    """Subgraph induced on ``vertices``, relabelled to 0..k-1 in index order."""
    order = list(bits(vertices))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(order), edges)


def is_k2_union(g: Graph) -> bool:
    """True iff every component of ``g`` is a single edge."""
    return all(popcount(nb) == 1 for nb in g.adj)
