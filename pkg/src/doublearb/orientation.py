"""Treelike orientations of arborescences and double-arborescences.

An orientation is stored as the rooted Hasse tree of its poset. For an
arborescence the root is a universal vertex and sits at the top
(``ROOT_GREATEST``). A double-arborescence glues two such trees at a shared
root: one hangs below it, the other grows above it (``ROOT_LEAST``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .graph import (
    Graph,
    VertexSet,
    bit,
    co_components,
    components,
    lowest,
    members,
    popcount,
    require_connected,
    universal_vertices,
)

ROOT_GREATEST = "root-greatest"
ROOT_LEAST = "root-least"


@dataclass(frozen=True)
class RootedForestPoset:
    root: int
    parent: dict[int, int]
    direction: str = ROOT_GREATEST

    @property
    def vertices(self) -> list[int]:
        return sorted({self.root, *self.parent})

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in self.vertices}
        for child, par in self.parent.items():
            kids[par].append(child)
        for lst in kids.values():
            lst.sort()
        return kids

    def ancestors(self, v: int) -> list[int]:
        out = []
        seen = {v}
        while v in self.parent:
            v = self.parent[v]
            if v in seen:
                raise ValueError("parent links contain a cycle")
            seen.add(v)
            out.append(v)
        return out

    def reversed(self) -> RootedForestPoset:
        flipped = ROOT_LEAST if self.direction == ROOT_GREATEST else ROOT_GREATEST
        return RootedForestPoset(self.root, dict(self.parent), flipped)

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "parents": [[c, p] for c, p in sorted(self.parent.items())],
            "direction": self.direction,
        }

    def to_dot(self, g: Graph | None = None, name: str = "poset") -> str:
        def lab(v):
            return json.dumps(g.label(v) if g is not None else str(v))
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = ' shape="doublecircle"' if v == self.root else ""
            lines.append(f"  {lab(v)} [label={lab(v)}{shape}];")
        for child, par in sorted(self.parent.items()):
            lines.append(f"  {lab(child)} -> {lab(par)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DoubleArbOrientation:
    root: int
    below: RootedForestPoset
    above: RootedForestPoset

    @property
    def vertices(self) -> list[int]:
        return sorted(set(self.below.vertices) | set(self.above.vertices))

    def is_strict(self) -> bool:
        """True when both sides hold a pair of incomparable vertices."""
        return _has_antichain(self.below) and _has_antichain(self.above)

    def to_json(self) -> dict:
        return {"root": self.root, "below": self.below.to_json(), "above": self.above.to_json()}

    def to_dot(self, g: Graph | None = None, name: str = "poset") -> str:
        def lab(v):
            return json.dumps(g.label(v) if g is not None else str(v))
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = ' shape="doublecircle"' if v == self.root else ""
            lines.append(f"  {lab(v)} [label={lab(v)}{shape}];")
        # edges point from the smaller element to the larger one
        for child, par in sorted(self.below.parent.items()):
            lines.append(f"  {lab(child)} -> {lab(par)};")
        for child, par in sorted(self.above.parent.items()):
            lines.append(f"  {lab(par)} -> {lab(child)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _has_antichain(p: RootedForestPoset) -> bool:
    # a rooted tree is a chain iff no vertex has two children
    counts: dict[int, int] = {}
    for par in p.parent.values():
        counts[par] = counts.get(par, 0) + 1
        if counts[par] > 1:
            return True
    return False


def _peel(adj, s: VertexSet, root: int | None = None) -> dict[int, int] | None:
    """Peel universal vertices off ``g[s]`` recursively.

    Returns the parent map of the resulting rooted tree (the top vertex maps
    to -1), or None when some connected piece has no universal vertex.
    """
    parent: dict[int, int] = {}
    stack = [(s, -1, root)]
    while stack:
        part, up, forced = stack.pop()
        while True:
            if forced is not None:
                u = forced
                if (adj[u] | (1 << u)) & part != part:
                    return None
                forced = None
            else:
                u = -1
                rest = part
                while rest:
                    low = rest & -rest
                    v = low.bit_length() - 1
                    if (adj[v] | low) & part == part:
                        u = v
                        break
                    rest ^= low
                if u < 0:
                    return None
            parent[u] = up
            part &= ~(1 << u)
            up = u
            if not part:
                break
            pieces = components(adj, part)
            if len(pieces) == 1:
                continue
            for piece in reversed(pieces):
                stack.append((piece, u, None))
            break
    return parent


def _to_poset(parent: dict[int, int], direction: str) -> RootedForestPoset:
    root = next(v for v, p in parent.items() if p < 0)
    return RootedForestPoset(root, {v: p for v, p in parent.items() if p >= 0}, direction)


def arborescence_orientation(g: Graph) -> RootedForestPoset | None:
    """Arborescence orientation with the root on top, or None if ``g`` is not one."""
    require_connected(g)
    parent = _peel(g.adj, g.all)
    if parent is None:
        return None
    return _to_poset(parent, ROOT_GREATEST)


def double_arborescence_orientation(g: Graph) -> DoubleArbOrientation | None:
    require_connected(g)
    univ = universal_vertices(g)
    if not univ:
        return None
    r = lowest(univ)
    rest = g.all & ~bit(r)
    if not rest:
        below = RootedForestPoset(r, {}, ROOT_GREATEST)
        return DoubleArbOrientation(r, below, RootedForestPoset(r, {}, ROOT_LEAST))
    singles = 0
    fat = []
    for part in co_components(g, rest):
        if popcount(part) == 1:
            singles |= part
        else:
            fat.append(part)
    # the two sides are completely joined through r, so each side holds at
    # most one co-component with a non-edge
    if len(fat) > 2:
        return None
    for sides in itertools.product((0, 1), repeat=len(fat)):
        a = bit(r) | singles
        b = bit(r)
        for part, side in zip(fat, sides):
            if side == 0:
                a |= part
            else:
                b |= part
        below = _peel(g.adj, a, root=r)
        if below is None:
            continue
        above = _peel(g.adj, b, root=r)
        if above is None:
            continue
        return DoubleArbOrientation(
            r, _to_poset(below, ROOT_GREATEST), _to_poset(above, ROOT_LEAST)
        )
    return None


def _deepest_path(p: RootedForestPoset) -> list[int]:
    kids = p.children()
    best: dict[int, list[int]] = {}
    order = [p.root]
    for v in order:
        order.extend(kids[v])
    for v in reversed(order):
        candidates = [best[c] for c in kids[v]]
        if candidates:
            tail = min(candidates, key=lambda path: (-len(path), path))
            best[v] = [v] + tail
        else:
            best[v] = [v]
    return best[p.root]


def longest_chain(p: RootedForestPoset | DoubleArbOrientation) -> list[int]:
    """A maximum chain; its size is the clique number of the underlying graph.

    For a single tree the chain runs from the root down. For a
    double-arborescence it runs from the bottom of the lower tree, through
    the root, to the top of the upper tree.
    """
    if isinstance(p, DoubleArbOrientation):
        low = _deepest_path(p.below)
        high = _deepest_path(p.above)
        return low[::-1] + high[1:]
    return _deepest_path(p)


def _ancestor_masks(p: RootedForestPoset) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in p.vertices:
        out[v] = sum(1 << a for a in p.ancestors(v))
    return out


def _is_rooted_tree(p: RootedForestPoset) -> bool:
    if p.root in p.parent:
        return False
    try:
        for v in p.parent:
            anc = p.ancestors(v)
            if not anc or anc[-1] != p.root:
                return False
    except ValueError:
        return False
    return True


def verify_treelike_orientation(g: Graph, o: RootedForestPoset | DoubleArbOrientation) -> bool:
    """Check that comparability in ``o`` coincides with adjacency in ``g``."""
    if isinstance(o, DoubleArbOrientation):
        posets = [o.below, o.above]
        if o.below.root != o.root or o.above.root != o.root:
            return False
        if set(o.below.vertices) & set(o.above.vertices) != {o.root}:
            return False
    else:
        posets = [o]
    if not all(_is_rooted_tree(p) for p in posets):
        return False
    if sorted(set().union(*(p.vertices for p in posets))) != list(range(g.n)):
        return False
    comparable = [0] * g.n
    for p in posets:
        anc = _ancestor_masks(p)
        for v, mask in anc.items():
            comparable[v] |= mask
            for a in members(mask):
                comparable[a] |= 1 << v
    if isinstance(o, DoubleArbOrientation):
        low = sum(1 << v for v in o.below.vertices) & ~bit(o.root)
        high = sum(1 << v for v in o.above.vertices) & ~bit(o.root)
        for v in members(low):
            comparable[v] |= high
        for v in members(high):
            comparable[v] |= low
    return all(comparable[v] == g.adj[v] for v in range(g.n))
