"""Simple undirected graphs over dense integer ids with bit-set adjacency rows.

Vertex sets are plain Python ints used as bit-sets (bit ``v`` set means
vertex ``v`` is a member), so rows grow past 64 vertices without any
special casing.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = int


class GraphError(ValueError):
    """Base class for graph-level usage errors."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DisconnectedGraphError(GraphError):
    pass


class UnsupportedPatternError(GraphError):
    pass


def bit(v: int) -> int:
    return 1 << v


def members(s: VertexSet) -> Iterator[int]:
    """Yield the vertices of a bit-set in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def vset(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def popcount(s: VertexSet) -> int:
    return bin(s).count("1")


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at {u}")
            for v in members(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.names is not None and len(self.names) != self.n:
            raise GraphError("names must label every vertex")

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Skip validation; for hot loops whose rows are symmetric by construction."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "names", None)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   names: Sequence[str] | None = None) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(names) if names is not None else None)

    @property
    def all(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(members(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.names is None:
            try:
                v = int(label)
            except ValueError:
                raise GraphError(f"unknown vertex label {label!r}") from None
            if not 0 <= v < self.n:
                raise GraphError(f"unknown vertex label {label!r}")
            return v
        try:
            return self.names.index(label)
        except ValueError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``; new vertex ``i`` is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(vset(pos[u] for u in members(self.adj[v]) if u in pos))
        names = tuple(self.label(v) for v in vertices) if self.names is not None else None
        return Graph(len(vertices), tuple(rows), names)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = vset(perm[u] for u in members(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.all
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def edge_mask(self) -> int:
        """Upper-triangle encoding: bit ``k`` for the k-th pair (u<v) in row-major order."""
        mask, k = 0, 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adj[u] >> v & 1:
                    mask |= 1 << k
                k += 1
        return mask

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def load_graph(text: str) -> Graph:
    """Parse the edge-list format: a vertex count, then one ``u v`` pair per line.

    ``#`` starts a comment; blank lines are ignored. Duplicate edges collapse.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ParseError(lineno, "expected the vertex count on its own line")
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(lineno, f"vertex count {parts[0]!r} is not an integer") from None
            if n < 1:
                raise ParseError(lineno, "vertex count must be at least 1")
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"self-loop at {u}")
        edges.append((u, v))
    if n is None:
        raise ParseError(0, "empty document, no vertex count")
    return Graph.from_edges(n, edges)


def component_of(adj: Sequence[int], s: VertexSet, start: int) -> VertexSet:
    """Vertices of ``s`` reachable from ``start`` inside the subgraph induced by ``s``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v]
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen


def components(adj: Sequence[int], s: VertexSet) -> list[VertexSet]:
    out = []
    while s:
        comp = component_of(adj, s, lowest(s))
        out.append(comp)
        s &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return component_of(g.adj, g.all, 0) == g.all


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")


def universal_vertices(g: Graph) -> VertexSet:
    full = g.all
    return vset(v for v in range(g.n) if g.adj[v] | (1 << v) == full)


def co_components(g: Graph, s: VertexSet) -> list[VertexSet]:
    """Connected components of the complement of ``g[s]``, ordered by lowest vertex."""
    if not s:
        raise GraphError("co_components needs a nonempty vertex set")
    co = [0] * g.n
    for v in members(s):
        co[v] = s & ~g.adj[v] & ~(1 << v)
    return components(co, s)


def find_induced_copy(g: Graph, h: Graph) -> dict[int, int] | None:
    """Exhaustively search for an induced copy of pattern ``h`` in ``g``.

    Returns a map from pattern vertices to graph vertices, or None.
    Patterns are capped at 8 vertices.
    """
    if h.n > 8:
        raise UnsupportedPatternError(f"pattern has {h.n} vertices; the matcher supports at most 8")
    if h.n > g.n:
        return None
    order, ties = _search_plan(h)
    adj = g.adj
    full = g.all
    image = [0] * h.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        cand = full & ~used
        row = ties[i]
        for j in range(i):
            if row[j]:
                cand &= adj[image[j]]
            else:
                cand &= ~adj[image[j]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    if not extend(0, 0):
        return None
    return {order[i]: image[i] for i in range(h.n)}


@functools.lru_cache(maxsize=256)
def _search_plan(h: Graph) -> tuple[list[int], list[list[bool]]]:
    order = _search_order(h)
    # for position i: pattern-edge flags against every earlier position
    ties = [[h.has_edge(order[i], order[j]) for j in range(i)] for i in range(len(order))]
    return order, ties


def _search_order(h: Graph) -> list[int]:
    # grow each connected piece breadth-first so candidates are pinned early
    order: list[int] = []
    seen = 0
    for start in range(h.n):
        if seen >> start & 1:
            continue
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in members(h.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    return order


# Fixed patterns -----------------------------------------------------------

def path_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel_graph(rim: int) -> Graph:
    """Rim cycle 0..rim-1 plus a hub at vertex ``rim``."""
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


P4 = path_graph(4)
C4 = cycle_graph(4)
HOUSE = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])
GEM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)])
DOMINO = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
NET = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])
W4 = wheel_graph(4)
