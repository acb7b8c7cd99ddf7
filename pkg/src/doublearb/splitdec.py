"""Clique-star split-decomposition trees of distance-hereditary graphs.

The tree is built by replaying a pendant/twin pruning sequence backwards.
Every re-inserted vertex splices a fresh three-node clique or star between
its anchor's pendant and the rest of the tree; the splice is then merged into
its neighbour whenever the two would form a clique-clique marked edge or a
star-center-to-star-leaf marked edge. What remains is the unique minimal
tree.

Node ids: the pendant node of graph vertex ``v`` has id ``v``; marked
(internal) nodes get ids ``n, n+1, ...``. Every node has exactly one tree
edge (T-edge), stored in ``tlink``; the edges inside components are
F-edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, VertexSet, members, require_connected

CLIQUE = "clique"
STAR = "star"

PENDANT = "pendant"
TRUE_TWIN = "true-twin"
FALSE_TWIN = "false-twin"


@dataclass(frozen=True)
class PruneMove:
    kind: str
    vertex: int
    anchor: int


def _prune(g: Graph) -> tuple[list[PruneMove], VertexSet]:
    """Greedy pruning; returns the moves and the set of vertices left at the end."""
    adj = g.adj
    alive = g.all
    moves: list[PruneMove] = []
    remaining = g.n
    while remaining > 1:
        closed: dict[int, int] = {}
        opened: dict[int, int] = {}
        found = None
        s = alive
        while s:
            low = s & -s
            s ^= low
            v = low.bit_length() - 1
            nb = adj[v] & alive
            if nb and nb & (nb - 1) == 0:
                found = PruneMove(PENDANT, v, nb.bit_length() - 1)
                break
            u = closed.get(nb | low)
            if u is not None:
                found = PruneMove(TRUE_TWIN, v, u)
                break
            u = opened.get(nb)
            if u is not None:
                found = PruneMove(FALSE_TWIN, v, u)
                break
            closed[nb | low] = v
            opened[nb] = v
        if found is None:
            return moves, alive
        moves.append(found)
        alive &= ~(1 << found.vertex)
        remaining -= 1
    return moves, alive


def prune_dh(g: Graph) -> list[PruneMove] | None:
    """Pendant/twin elimination down to one vertex, or None if ``g`` is not distance-hereditary."""
    require_connected(g)
    moves, alive = _prune(g)
    if alive & (alive - 1):
        return None
    return moves


@dataclass(frozen=True)
class Component:
    kind: str
    vertices: tuple[int, ...]
    center: int | None = None

    def f_neighbors(self, node: int) -> tuple[int, ...]:
        if self.kind == CLIQUE:
            return tuple(x for x in self.vertices if x != node)
        if node == self.center:
            return tuple(x for x in self.vertices if x != node)
        return (self.center,)


@dataclass(frozen=True)
class AlternatedPath:
    nodes: tuple[int, ...]
    kinds: tuple[str, ...]

    def __post_init__(self):
        assert len(self.kinds) == len(self.nodes) - 1
        assert all(a != b for a, b in zip(self.kinds, self.kinds[1:]))


@dataclass(frozen=True)
class CliqueStarTree:
    n: int
    components: tuple[Component, ...]
    tlink: dict[int, int]
    component_of: dict[int, int]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def is_pendant(self, node: int) -> bool:
        return node < self.n

    @property
    def tree_edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, b in self.tlink.items() if a < b)

    def marked_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.tree_edges if a >= self.n and b >= self.n]

    def marked_vertices(self, ci: int) -> list[int]:
        return [x for x in self.components[ci].vertices if self.tlink[x] >= self.n]

    def is_center(self, node: int) -> bool:
        ci = self.component_of.get(node)
        return ci is not None and self.components[ci].center == node

    def is_s_leaf(self, node: int) -> bool:
        ci = self.component_of.get(node)
        if ci is None:
            return False
        comp = self.components[ci]
        return comp.kind == STAR and comp.center != node

    def label(self, node: int) -> str:
        if node < self.n:
            return self.names[node] if self.names is not None else str(node)
        return f"m{node}"

    def to_json(self) -> dict:
        comps = []
        for comp in self.components:
            entry = {"kind": comp.kind, "members": list(comp.vertices)}
            if comp.kind == STAR:
                entry["center"] = comp.center
            comps.append(entry)
        return {
            "n": self.n,
            "components": comps,
            "edges": [list(e) for e in self.tree_edges],
        }

    def to_dot(self, name: str = "split_tree") -> str:
        def q(node):
            return json.dumps(self.label(node))
        lines = [f"graph {name} {{", "  node [shape=circle];"]
        for v in range(self.n):
            lines.append(f"  {q(v)} [shape=box];")
        for ci, comp in enumerate(self.components):
            lines.append(f"  subgraph cluster_{ci} {{")
            lines.append(f'    label="{comp.kind} {ci}";')
            for x in comp.vertices:
                style = ' style="filled" fillcolor="black" fontcolor="white"' if x == comp.center else ""
                lines.append(f'    {q(x)} [label=""{style}];')
            for a, b in _f_edges(comp):
                lines.append(f"    {q(a)} -- {q(b)} [style=dashed];")
            lines.append("  }")
        for a, b in self.tree_edges:
            lines.append(f"  {q(a)} -- {q(b)} [style=solid];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _f_edges(comp: Component) -> list[tuple[int, int]]:
    if comp.kind == STAR:
        return [(comp.center, x) for x in comp.vertices if x != comp.center]
    vs = comp.vertices
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


class _Builder:
    """Mutable graph-labelled tree used while replaying a pruning sequence."""

    def __init__(self, n: int):
        self.n = n
        self.next_node = n
        self.next_comp = 0
        self.tlink: dict[int, int] = {}
        self.owner: dict[int, int] = {}
        # comp id -> [kind, set of nodes, center]
        self.comps: dict[int, list] = {}

    def _new_comp(self, kind: str, nodes: set[int], center: int | None) -> int:
        cid = self.next_comp
        self.next_comp += 1
        self.comps[cid] = [kind, nodes, center]
        for x in nodes:
            self.owner[x] = cid
        return cid

    def link(self, a: int, b: int) -> None:
        self.tlink[a] = b
        self.tlink[b] = a

    def insert(self, move: PruneMove) -> None:
        x, y = move.vertex, move.anchor
        q = self.tlink[y]
        d0, dy, dx = self.next_node, self.next_node + 1, self.next_node + 2
        self.next_node += 3
        self.link(d0, q)
        self.link(dy, y)
        self.link(dx, x)
        if move.kind == TRUE_TWIN:
            self._new_comp(CLIQUE, {d0, dy, dx}, None)
        elif move.kind == FALSE_TWIN:
            self._new_comp(STAR, {d0, dy, dx}, d0)
        else:
            self._new_comp(STAR, {d0, dy, dx}, dy)
        self.normalize([(d0, q)])

    def _mergeable(self, p: int, pp: int) -> bool:
        kind1, _, center1 = self.comps[self.owner[p]]
        kind2, _, center2 = self.comps[self.owner[pp]]
        if kind1 == CLIQUE and kind2 == CLIQUE:
            return True
        if kind1 == STAR and kind2 == STAR:
            return (p == center1) != (pp == center2)
        return False

    def _merge(self, p: int, pp: int) -> int:
        c1, c2 = self.owner[p], self.owner[pp]
        kind1, nodes1, center1 = self.comps.pop(c1)
        kind2, nodes2, center2 = self.comps.pop(c2)
        nodes = (nodes1 - {p}) | (nodes2 - {pp})
        if kind1 == CLIQUE:
            center = None
        else:
            # the side joined through a leaf keeps its center
            center = center2 if p == center1 else center1
        for x in (p, pp):
            del self.tlink[x]
            del self.owner[x]
        return self._new_comp(kind1, nodes, center)

    def normalize(self, work: list[tuple[int, int]]) -> None:
        while work:
            p, pp = work.pop()
            if p not in self.tlink or pp < self.n or p < self.n:
                continue
            if self.tlink[p] != pp or not self._mergeable(p, pp):
                continue
            cid = self._merge(p, pp)
            for x in self.comps[cid][1]:
                other = self.tlink[x]
                if other >= self.n:
                    work.append((x, other))

    def freeze(self, names) -> CliqueStarTree:
        # renumber marked nodes densely, component by component
        order = sorted(self.comps, key=lambda cid: min(
            (self.tlink[x] for x in self.comps[cid][1] if self.tlink[x] < self.n), default=self.n))
        renum: dict[int, int] = {v: v for v in range(self.n)}
        nxt = self.n
        comps = []
        for cid in order:
            kind, nodes, center = self.comps[cid]
            for x in sorted(nodes):
                renum[x] = nxt
                nxt += 1
            comps.append((kind, nodes, center))
        final = []
        component_of = {}
        for ci, (kind, nodes, center) in enumerate(comps):
            vs = tuple(sorted(renum[x] for x in nodes))
            final.append(Component(kind, vs, renum[center] if center is not None else None))
            for x in vs:
                component_of[x] = ci
        tlink = {renum[a]: renum[b] for a, b in self.tlink.items()}
        return CliqueStarTree(self.n, tuple(final), tlink, component_of, names)


def build_clique_star_tree(g: Graph) -> CliqueStarTree | None:
    """The minimal clique-star tree of ``g``, or None if ``g`` is not distance-hereditary.

    A single vertex gives a lone pendant; two vertices give two pendants
    joined by one T-edge.
    """
    require_connected(g)
    moves, alive = _prune(g)
    if alive & (alive - 1):
        return None
    b = _Builder(g.n)
    if moves:
        last = moves[-1]
        b.link(last.vertex, last.anchor)
        for move in reversed(moves[:-1]):
            b.insert(move)
    return b.freeze(g.names)


def _alternated_from(t: CliqueStarTree, start: int):
    """Yield every alternated path that leaves ``start`` through its T-edge.

    Each path is yielded as (nodes, kinds) and always ends on a T-edge.
    """
    first = t.tlink[start]
    stack = [((start, first), ("T",))]
    while stack:
        nodes, kinds = stack.pop()
        yield nodes, kinds
        end = nodes[-1]
        if end < t.n:
            continue
        comp = t.components[t.component_of[end]]
        for nb in comp.f_neighbors(end):
            nxt = t.tlink[nb]
            stack.append((nodes + (nb, nxt), kinds + ("F", "T")))


def accessibility_graph(t: CliqueStarTree) -> Graph:
    """Graph on the pendants; two are adjacent iff an alternated path joins them."""
    rows = [0] * t.n
    for v in range(t.n):
        if v not in t.tlink:
            continue
        for nodes, _ in _alternated_from(t, v):
            if nodes[-1] < t.n:
                rows[v] |= 1 << nodes[-1]
    return Graph(t.n, tuple(rows), t.names)


def _endpoint_search(t: CliqueStarTree, is_endpoint) -> AlternatedPath | None:
    for ci, comp in enumerate(t.components):
        if comp.kind != STAR:
            continue
        for x in comp.vertices:
            if not is_endpoint(x):
                continue
            for nodes, kinds in _alternated_from(t, x):
                end = nodes[-1]
                if end >= t.n and t.component_of[end] != ci and is_endpoint(end):
                    return AlternatedPath(nodes, kinds)
    return None


def find_center_center_path(t: CliqueStarTree) -> AlternatedPath | None:
    """An alternated path joining the centers of two stars, avoiding both stars' F-edges."""
    return _endpoint_search(t, t.is_center)


def find_s_leaf_path(t: CliqueStarTree) -> AlternatedPath | None:
    """An alternated path joining leaves of two stars, avoiding both stars' F-edges."""
    return _endpoint_search(t, t.is_s_leaf)


@dataclass
class RecognitionReport:
    n: int
    is_dh: bool
    is_treelike: bool
    is_double_arb: bool
    is_arb: bool
    tree: CliqueStarTree | None = None
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def is_strict(self) -> bool:
        return self.is_double_arb and not self.is_arb

    @property
    def classification(self) -> str:
        if self.is_arb:
            return "arborescence"
        if self.is_double_arb:
            return "strict double-arborescence"
        if self.is_treelike:
            return "treelike comparability"
        if self.is_dh:
            return "distance-hereditary"
        return "not distance-hereditary"

    def flags(self) -> dict[str, bool]:
        return {
            "dh": self.is_dh,
            "treelike": self.is_treelike,
            "double_arborescence": self.is_double_arb,
            "arborescence": self.is_arb,
            "strict": self.is_strict,
        }


def classify_via_tree(g: Graph) -> RecognitionReport:
    """Decide the class of ``g`` from its minimal split-decomposition tree."""
    require_connected(g)
    moves, alive = _prune(g)
    if alive & (alive - 1):
        return RecognitionReport(g.n, False, False, False, False,
                                 witnesses={"dh": {"stuck": list(members(alive))}})
    t = build_clique_star_tree(g)
    witnesses: dict[str, object] = {}

    treelike_bad = None
    for ci, comp in enumerate(t.components):
        if comp.kind == CLIQUE and len(t.marked_vertices(ci)) > 2:
            treelike_bad = {"clique_component": ci, "marked": t.marked_vertices(ci)}
            break
    if treelike_bad is None:
        for a, b in t.marked_edges():
            if t.is_center(a) and t.is_center(b):
                treelike_bad = {"center_center_marked_edge": [a, b]}
                break
    if treelike_bad is not None:
        witnesses["treelike"] = treelike_bad

    s_leaf = find_s_leaf_path(t)
    cc = find_center_center_path(t)
    if s_leaf is not None:
        witnesses["s_leaf_path"] = s_leaf
    if cc is not None:
        witnesses["center_center_path"] = cc

    is_treelike = treelike_bad is None
    return RecognitionReport(
        n=g.n,
        is_dh=True,
        is_treelike=is_treelike,
        is_double_arb=is_treelike and s_leaf is None,
        is_arb=cc is None and s_leaf is None,
        tree=t,
        witnesses=witnesses,
    )


def check_tree_conditions(t: CliqueStarTree) -> list[str]:
    """Violations of the minimality conditions; empty for a well-formed minimal tree."""
    problems = []
    for ci, comp in enumerate(t.components):
        if len(comp.vertices) < 3:
            problems.append(f"component {ci} has fewer than three vertices")
        if comp.kind == STAR and comp.center not in comp.vertices:
            problems.append(f"star {ci} has no center among its vertices")
    for a, b in t.marked_edges():
        ka = t.components[t.component_of[a]]
        kb = t.components[t.component_of[b]]
        if ka.kind == CLIQUE and kb.kind == CLIQUE:
            problems.append(f"marked edge {a}-{b} joins two cliques")
        if ka.kind == STAR and kb.kind == STAR and t.is_center(a) != t.is_center(b):
            problems.append(f"marked edge {a}-{b} joins a star center to a star leaf")
    pendants = [v for v in range(t.n) if v in t.tlink or t.n == 1]
    if len(pendants) != t.n:
        problems.append("pendants do not cover the graph's vertices")
    # underlying tree: components contracted, plus pendants
    if t.n >= 2:
        nodes_count = len(t.components) + t.n
        edges_count = len(t.tree_edges)
        if edges_count != nodes_count - 1:
            problems.append("T-edges do not form a tree")
        else:
            parent = list(range(nodes_count))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            def contract(node):
                return node if node < t.n else t.n + t.component_of[node]
            for a, b in t.tree_edges:
                ra, rb = find(contract(a)), find(contract(b))
                if ra == rb:
                    problems.append("T-edges contain a cycle")
                    break
                parent[ra] = rb
    return problems


__all__ = [
    "AlternatedPath", "CLIQUE", "CliqueStarTree", "Component", "PruneMove",
    "RecognitionReport", "STAR", "accessibility_graph", "build_clique_star_tree",
    "check_tree_conditions", "classify_via_tree", "find_center_center_path",
    "find_s_leaf_path", "prune_dh",
]
