"""Instance generators and the cross-characterization harness.

Randomness comes from SplitMix64 so that a (n, seed) pair names the same
instance everywhere:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                       (all arithmetic mod 2**64)

``below(m)`` draws uniformly from 0..m-1 by rejection on the top bits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .graph import (
    C4,
    P4,
    Graph,
    GraphError,
    component_of,
    find_induced_copy,
    require_connected,
)
from .orientation import (
    ROOT_GREATEST,
    ROOT_LEAST,
    DoubleArbOrientation,
    RootedForestPoset,
    arborescence_orientation,
    double_arborescence_orientation,
)
from .splitdec import (
    accessibility_graph,
    classify_via_tree,
    find_center_center_path,
    find_s_leaf_path,
)

MASK64 = (1 << 64) - 1


class InfeasibleConfigError(GraphError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("below() needs a positive bound")
        bits = max(1, (m - 1).bit_length())
        while True:
            x = self.next_u64() >> (64 - bits)
            if x < m:
                return x

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    branching: int | None = None  # None: unbounded
    strict: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.branching is not None and self.branching < 1:
            raise ValueError("branching must be at least 1")


def _random_tree(rng: SplitMix64, size: int, branching: int | None,
                 forced_root_children: int = 0) -> list[int]:
    """Parent array of a random rooted tree on nodes 0..size-1 (root 0, parent[0] = -1)."""
    parent = [-1] * size
    kids = [0] * size
    for i in range(1, size):
        if i <= forced_root_children:
            p = 0
        else:
            eligible = [j for j in range(i) if branching is None or kids[j] < branching]
            p = eligible[rng.below(len(eligible))]
        parent[i] = p
        kids[p] += 1
    return parent


def _closure_rows(n: int, parent: dict[int, int]) -> list[int]:
    rows = [0] * n
    for v in range(n):
        u = parent.get(v, -1)
        while u >= 0:
            rows[v] |= 1 << u
            rows[u] |= 1 << v
            u = parent.get(u, -1)
    return rows


def gen_arborescence(cfg: GenConfig) -> tuple[Graph, RootedForestPoset]:
    """Comparability graph of a random rooted tree, with its orientation."""
    rng = SplitMix64(cfg.seed)
    tree = _random_tree(rng, cfg.n, cfg.branching)
    perm = list(range(cfg.n))
    rng.shuffle(perm)
    parent = {perm[i]: perm[p] for i, p in enumerate(tree) if p >= 0}
    g = Graph(cfg.n, tuple(_closure_rows(cfg.n, parent)))
    return g, RootedForestPoset(perm[0], parent, ROOT_GREATEST)


def gen_double_arborescence(cfg: GenConfig) -> tuple[Graph, DoubleArbOrientation]:
    """Two random rooted trees glued at a shared root, one below and one above it.

    With ``strict`` set, the root gets at least two children on each side, so
    both sides hold an incomparable pair.
    """
    n = cfg.n
    if cfg.strict and n < 5:
        raise InfeasibleConfigError("a strict double-arborescence needs at least 5 vertices")
    if cfg.strict and cfg.branching == 1:
        raise InfeasibleConfigError("a strict double-arborescence needs branching >= 2")
    rng = SplitMix64(cfg.seed)
    if cfg.strict:
        low_size = rng.between(2, n - 3)
    else:
        low_size = rng.between(0, n - 1)
    high_size = n - 1 - low_size
    forced = 2 if cfg.strict else 0
    low = _random_tree(rng, low_size + 1, cfg.branching, forced)
    high = _random_tree(rng, high_size + 1, cfg.branching, forced)
    perm = list(range(n))
    rng.shuffle(perm)
    r = perm[0]
    low_ids = [r] + perm[1:low_size + 1]
    high_ids = [r] + perm[low_size + 1:]
    below = {low_ids[i]: low_ids[p] for i, p in enumerate(low) if p >= 0}
    above = {high_ids[i]: high_ids[p] for i, p in enumerate(high) if p >= 0}
    rows = _closure_rows(n, below)
    for v, extra in enumerate(_closure_rows(n, above)):
        rows[v] |= extra
    low_mask = sum(1 << v for v in low_ids[1:])
    high_mask = sum(1 << v for v in high_ids[1:])
    for v in low_ids[1:]:
        rows[v] |= high_mask
    for v in high_ids[1:]:
        rows[v] |= low_mask
    o = DoubleArbOrientation(
        r, RootedForestPoset(r, below, ROOT_GREATEST), RootedForestPoset(r, above, ROOT_LEAST)
    )
    return Graph(n, tuple(rows)), o


def transitive_closure_rows(n: int, arcs: list[tuple[int, int]]) -> list[int]:
    """Reachability rows of a digraph; raises if the digraph has a cycle."""
    out = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        raise AssertionError("root-path orientation produced a directed cycle")
    reach = [0] * n
    for v in reversed(order):
        for w in out[v]:
            reach[v] |= reach[w] | (1 << w)
    return reach


def gen_path_of_double_arborescences(k: int, cfg: GenConfig) -> Graph:
    """``k`` strict double-arborescences whose roots are joined by a path.

    ``cfg.n`` is the total vertex count; each piece gets at least 5 vertices.
    Root-path edges get random directions and the comparability graph of the
    transitive closure is returned.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if cfg.n < 5 * k:
        raise InfeasibleConfigError(f"{k} strict pieces need at least {5 * k} vertices")
    if cfg.branching == 1:
        raise InfeasibleConfigError("strict pieces need branching >= 2")
    rng = SplitMix64(cfg.seed)
    sizes = [5] * k
    for _ in range(cfg.n - 5 * k):
        sizes[rng.below(k)] += 1
    arcs: list[tuple[int, int]] = []  # (smaller, larger) cover pairs
    roots = []
    base = 0
    for size in sizes:
        r = base
        low_size = rng.between(2, size - 3)
        low = _random_tree(rng, low_size + 1, cfg.branching, 2)
        high = _random_tree(rng, size - low_size, cfg.branching, 2)
        low_ids = [r] + list(range(base + 1, base + 1 + low_size))
        high_ids = [r] + list(range(base + 1 + low_size, base + size))
        arcs += [(low_ids[i], low_ids[p]) for i, p in enumerate(low) if p >= 0]
        arcs += [(high_ids[p], high_ids[i]) for i, p in enumerate(high) if p >= 0]
        roots.append(r)
        base += size
    for r1, r2 in zip(roots, roots[1:]):
        arcs.append((r1, r2) if rng.below(2) else (r2, r1))
    n = cfg.n
    reach = transitive_closure_rows(n, arcs)
    rows = [0] * n
    for v in range(n):
        rows[v] |= reach[v]
        w = reach[v]
        while w:
            low_bit = w & -w
            rows[low_bit.bit_length() - 1] |= 1 << v
            w ^= low_bit
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, tuple(rows)).relabel(perm)


def gen_dh_graph(cfg: GenConfig) -> Graph:
    """Random distance-hereditary graph grown by pendant and twin insertions."""
    rng = SplitMix64(cfg.seed)
    rows = [0] * cfg.n
    for x in range(1, cfg.n):
        y = rng.below(x)
        move = rng.below(3)
        if move == 0:  # pendant
            rows[x] = 1 << y
        elif move == 1:  # true twin
            rows[x] = rows[y] | (1 << y)
        else:  # false twin; falls back to a pendant when y is isolated (x == 1)
            rows[x] = rows[y] if rows[y] else 1 << y
        for v in range(x):
            if rows[x] >> v & 1:
                rows[v] |= 1 << x
    perm = list(range(cfg.n))
    rng.shuffle(perm)
    return Graph(cfg.n, tuple(rows)).relabel(perm)


# Exhaustive enumeration ------------------------------------------------------

MAX_ENUM_N = 7


def _pair_tables(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = len(pairs)
    split = m // 2
    tables = []
    for lo, hi in ((0, split), (split, m)):
        width = hi - lo
        table = []
        for chunk in range(1 << width):
            rows = [0] * n
            for k in range(width):
                if chunk >> k & 1:
                    u, v = pairs[lo + k]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            table.append(tuple(rows))
        tables.append(table)
    return m, split, tables


def enumerate_connected_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Every connected simple graph on ``n`` labeled vertices, once each.

    Bit ``k`` of the sweep mask is the k-th vertex pair (u < v) in row-major
    order. With ``dedup`` only the first graph of each isomorphism class is
    yielded (slow; meant for reporting counts).
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUM_N}")
    if n == 1:
        yield Graph(1, (0,))
        return
    m, split, (low_table, high_table) = _pair_tables(n)
    low_mask = (1 << split) - 1
    full = (1 << n) - 1
    seen: set[int] = set()
    perms = list(itertools.permutations(range(n))) if dedup else []
    for mask in range(1 << m):
        a = low_table[mask & low_mask]
        b = high_table[mask >> split]
        rows = tuple(x | y for x, y in zip(a, b))
        if component_of(rows, full, 0) != full:
            continue
        g = Graph.trusted(n, rows)
        if dedup:
            canon = min(g.relabel(p).edge_mask() for p in perms)
            if canon in seen:
                continue
            seen.add(canon)
        yield g


# Crosscheck ------------------------------------------------------------------

@dataclass
class CrossReport:
    def_arb: bool
    tree_arb: bool
    def_darb: bool
    tree_darb: bool
    p4_free: bool
    c4_free: bool
    dh: bool
    treelike: bool
    mismatches: list[str] = field(default_factory=list)

    @property
    def verdicts(self) -> tuple[bool, ...]:
        return (self.def_arb, self.tree_arb, self.def_darb, self.tree_darb,
                self.p4_free, self.c4_free, self.dh, self.treelike)

    def flags(self) -> dict[str, bool]:
        names = ("def_arb", "tree_arb", "def_darb", "tree_darb",
                 "p4_free", "c4_free", "dh", "treelike")
        return dict(zip(names, self.verdicts))


_STRICT_PATTERNS: list[Graph] | None = None


def strict_double_arb_patterns() -> list[Graph]:
    """Strict double-arborescences on 5 and 6 vertices, one per isomorphism class.

    Built directly from pairs of small rooted trees in which the root has at
    least two children, not by recognition.
    """
    global _STRICT_PATTERNS
    if _STRICT_PATTERNS is not None:
        return _STRICT_PATTERNS
    found: dict[int, Graph] = {}
    for n in (5, 6):
        perms = list(itertools.permutations(range(n)))
        for low_size in range(2, n - 2):
            high_size = n - 1 - low_size
            for low in _parent_arrays(low_size + 1):
                for high in _parent_arrays(high_size + 1):
                    if sum(1 for p in low if p == 0) < 2 or sum(1 for p in high if p == 0) < 2:
                        continue
                    below = {i: p for i, p in enumerate(low) if p >= 0}
                    above = {low_size + i: (low_size + p if p > 0 else 0)
                             for i, p in enumerate(high) if p >= 0}
                    rows = _closure_rows(n, below)
                    for v, extra in enumerate(_closure_rows(n, above)):
                        rows[v] |= extra
                    lows = range(1, low_size + 1)
                    highs = range(low_size + 1, n)
                    for a in lows:
                        for b in highs:
                            rows[a] |= 1 << b
                            rows[b] |= 1 << a
                    g = Graph(n, tuple(rows))
                    canon = min(g.relabel(p).edge_mask() for p in perms)
                    found.setdefault((n << 32) | canon, g)
    _STRICT_PATTERNS = list(found.values())
    return _STRICT_PATTERNS


def _parent_arrays(size: int):
    """All parent arrays of rooted trees on 0..size-1 with parent[i] < i."""
    for choice in itertools.product(*(range(i) for i in range(1, size))):
        yield [-1, *choice]


def crosscheck(g: Graph) -> CrossReport:
    """Evaluate every class through both routes and record disagreements."""
    require_connected(g)
    p4_free = find_induced_copy(g, P4) is None
    c4_free = find_induced_copy(g, C4) is None
    def_arb = arborescence_orientation(g) is not None
    def_darb = double_arborescence_orientation(g) is not None
    rep = classify_via_tree(g)
    report = CrossReport(
        def_arb=def_arb, tree_arb=rep.is_arb,
        def_darb=def_darb, tree_darb=rep.is_double_arb,
        p4_free=p4_free, c4_free=c4_free,
        dh=rep.is_dh, treelike=rep.is_treelike,
    )
    bad = report.mismatches
    if not def_arb == rep.is_arb == (p4_free and c4_free):
        bad.append("arborescence: definition, tree and (C4,P4)-free disagree")
    if not def_darb == rep.is_double_arb == (p4_free and rep.is_treelike):
        bad.append("double-arborescence: definition, tree and P4-free treelike disagree")
    if rep.is_dh:
        t = rep.tree
        if c4_free != (find_center_center_path(t) is None):
            bad.append("C4-free disagrees with absence of a center-center path")
        if p4_free != (find_s_leaf_path(t) is None):
            bad.append("P4-free disagrees with absence of an s-leaf-path")
        if accessibility_graph(t).adj != g.adj:
            bad.append("accessibility graph differs from the input graph")
    if rep.is_treelike and g.n <= 6:
        has_strict = any(find_induced_copy(g, h) is not None
                         for h in strict_double_arb_patterns() if h.n <= g.n)
        if c4_free == has_strict:
            bad.append("C4-free disagrees with absence of an induced strict double-arborescence")
    return report


@dataclass
class SweepSummary:
    n: int
    graphs: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    mismatches: list[tuple[Graph, list[str]]] = field(default_factory=list)


def sweep(n: int) -> SweepSummary:
    """Crosscheck every connected labeled graph on ``n`` vertices."""
    summary = SweepSummary(n)
    counts = {"dh": 0, "treelike": 0, "double_arborescence": 0, "arborescence": 0}
    for g in enumerate_connected_graphs(n):
        rep = crosscheck(g)
        summary.graphs += 1
        counts["dh"] += rep.dh
        counts["treelike"] += rep.treelike
        counts["double_arborescence"] += rep.def_darb
        counts["arborescence"] += rep.def_arb
        if rep.mismatches:
            summary.mismatches.append((g, rep.mismatches))
    summary.counts = counts
    return summary
