"""Words over vertex alphabets and the minimum word-representant constructions.

A word is any sequence of letters (vertex ids in practice; tests also use
strings). Two letters alternate when the word restricted to them never
repeats a letter back to back. A word represents a graph when alternation
coincides with adjacency.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Collection, Hashable, Sequence

import numpy as np

from .graph import Graph, GraphError
from .orientation import (
    ROOT_GREATEST,
    DoubleArbOrientation,
    RootedForestPoset,
    longest_chain,
)


class SearchSpaceError(GraphError):
    pass


def restrict(w: Sequence, letters: Collection[Hashable]):
    """Subword made of exactly the occurrences of ``letters``."""
    keep = set(letters)
    out = [x for x in w if x in keep]
    if isinstance(w, str):
        return "".join(out)
    return tuple(out)


def alternates(w: Sequence, a, b) -> bool:
    if a == b:
        raise ValueError("alternation is defined for two distinct letters")
    sub = restrict(w, (a, b))
    return all(x != y for x, y in zip(sub, sub[1:]))


@dataclass(frozen=True)
class Representation:
    ok: bool
    pair: tuple[int, int] | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def alternation_matrix(w: Sequence[int], n: int) -> np.ndarray:
    """Boolean matrix ``M[a, b]``: letters ``a`` and ``b`` alternate in ``w``.

    Letters ``a`` and ``b`` alternate iff every gap between consecutive
    occurrences of ``a`` holds a ``b`` and vice versa; gaps are counted with
    prefix sums. The diagonal is False.
    """
    letters = np.asarray(w, dtype=np.int64)
    L = len(letters)
    counts = np.zeros((n, L + 1), dtype=np.int32)
    if L:
        counts[letters, np.arange(1, L + 1)] = 1
    np.cumsum(counts, axis=1, out=counts)
    # min over each letter's gaps of the per-letter count inside the gap
    least = np.full((n, n), np.iinfo(np.int32).max, dtype=np.int64)
    order = np.argsort(letters, kind="stable")
    sorted_letters = letters[order]
    same = sorted_letters[1:] == sorted_letters[:-1]
    starts = order[:-1][same]
    ends = order[1:][same]
    owners = sorted_letters[1:][same]
    if len(owners):
        gaps = counts[:, ends] - counts[:, starts + 1]
        np.minimum.at(least.T, owners, gaps.T)
    ok = least >= 1
    m = ok & ok.T
    np.fill_diagonal(m, False)
    return m


def adjacency_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        m[u, v] = m[v, u] = True
    return m


def represents(w: Sequence[int], g: Graph) -> Representation:
    """Check whether ``w`` represents ``g``; on failure report the first bad pair."""
    present = set(w)
    missing = [v for v in range(g.n) if v not in present]
    if missing:
        raise GraphError(f"vertices missing from the word: {missing}")
    if any(not (isinstance(x, (int, np.integer)) and 0 <= x < g.n) for x in present):
        raise GraphError("word contains letters outside the graph's vertex range")
    diff = alternation_matrix(w, g.n) != adjacency_matrix(g)
    if not diff.any():
        return Representation(True)
    a, b = (int(x) for x in np.argwhere(np.triu(diff))[0])
    reason = "adjacent-but-not-alternating" if g.has_edge(a, b) else "alternating-but-not-adjacent"
    return Representation(False, (a, b), reason)


def represents_naive(w: Sequence[int], g: Graph) -> bool:
    """Pairwise restriction check, kept deliberately simple."""
    return all(
        alternates(w, a, b) == g.has_edge(a, b)
        for a, b in itertools.combinations(range(g.n), 2)
    )


def _check_chain(p: RootedForestPoset, chain: Sequence[int], kids: dict[int, list[int]]) -> None:
    if not chain or chain[0] != p.root:
        raise ValueError("chain must start at the root")
    for up, down in zip(chain, chain[1:]):
        if p.parent.get(down) != up:
            raise ValueError(f"{down} is not a child of {up}")
    if kids[chain[-1]]:
        raise ValueError("chain must end at a leaf")
    depth = {p.root: 1}
    order = [p.root]
    for v in order:
        for c in kids[v]:
            depth[c] = depth[v] + 1
            order.append(c)
    if len(chain) != max(depth.values()):
        raise ValueError("chain is not a longest chain")


def algorithm1_minword(p: RootedForestPoset, chain: Sequence[int]) -> tuple[int, ...]:
    """Breadth-first construction of a minimum word-representant of an arborescence.

    Children are taken in increasing id order, except that the chain child
    of a chain vertex comes first. The word is kept as a doubly linked list
    with the node of each vertex occurrence recorded, so splices never need
    to rescan the word.
    """
    if p.direction != ROOT_GREATEST:
        raise ValueError("algorithm1_minword expects the root to be the greatest element")
    kids = p.children()
    _check_chain(p, chain, kids)
    on_chain = set(chain)
    next_on_chain = dict(zip(chain, chain[1:]))

    letter: list[int] = []
    prv: list[int] = []
    nxt: list[int] = []
    occ: dict[int, list[int]] = {}
    HEAD, TAIL = 0, 1
    letter += [-1, -1]
    prv += [-1, HEAD]
    nxt += [TAIL, -1]

    def insert_before(anchor: int, v: int) -> int:
        node = len(letter)
        letter.append(v)
        before = prv[anchor]
        prv.append(before)
        nxt.append(anchor)
        nxt[before] = node
        prv[anchor] = node
        occ.setdefault(v, []).append(node)
        return node

    def first_node() -> int:
        return nxt[HEAD]

    insert_before(TAIL, p.root)
    queue = [p.root]
    for a in queue:
        children = kids[a]
        if not children:
            continue
        if a in on_chain:
            lead = next_on_chain[a]
            children = [lead] + [c for c in children if c != lead]
        queue.extend(children)
        if a in on_chain:
            # a1 a2 ... at . w . at ... a2
            front = first_node()
            for c in children:
                insert_before(front, c)
            for c in reversed(children[1:]):
                insert_before(TAIL, c)
        else:
            first, second = occ[a]
            for c in children:
                insert_before(first, c)
            for c in reversed(children):
                insert_before(second, c)

    word = []
    node = nxt[HEAD]
    while node != TAIL:
        word.append(letter[node])
        node = nxt[node]
    return tuple(word)


def split_at(w: Sequence[int], r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split ``w`` around its single occurrence of ``r``."""
    idx = [i for i, x in enumerate(w) if x == r]
    if len(idx) != 1:
        raise ValueError(f"{r} must occur exactly once, found {len(idx)}")
    i = idx[0]
    return tuple(w[:i]), tuple(w[i + 1:])


def double_arb_minword(o: DoubleArbOrientation) -> tuple[int, ...]:
    """Compose the words of the lower and upper trees into one word of length 2n - k."""
    r = o.root
    chain_below = longest_chain(o.below)
    chain_above = longest_chain(o.above)
    u = algorithm1_minword(o.below, chain_below)
    v = algorithm1_minword(o.above.reversed(), chain_above)
    u1, u2 = split_at(u, r)
    v1, v2 = split_at(v, r)
    return u2[::-1] + v1 + (r,) + u1[::-1] + v2


def represented_graph(w: Sequence[int], n: int) -> Graph:
    """The graph on letters 0..n-1 that ``w`` represents (restriction-based)."""
    rows = [0] * n
    for a, b in itertools.combinations(range(n), 2):
        if alternates(w, a, b):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def brute_force_min_length(g: Graph, cap: int, allow_large: bool = False
                           ) -> tuple[int, tuple[int, ...]] | None:
    """Shortest representing word of length at most ``cap``, by exhaustive search.

    Words are enumerated up to renaming of letters: the first occurrence of
    each new letter must be the smallest unused id. Each candidate's graph is
    compared against every relabelling of ``g``; a hit is translated back into
    ``g``'s own vertex ids.
    """
    n = g.n
    if cap < n:
        raise ValueError("cap must be at least the number of vertices")
    if n > 5 and cap > 2 * n and not allow_large:
        raise SearchSpaceError(f"search with n={n}, cap={cap} is too large; pass allow_large")

    # edge mask of each relabelling -> the permutation producing it
    relabelled: dict[int, tuple[int, ...]] = {}
    for perm in itertools.permutations(range(n)):
        relabelled.setdefault(g.relabel(perm).edge_mask(), perm)

    for length in range(n, cap + 1):
        for word in _growth_words(n, length):
            h = represented_graph(word, n)
            perm = relabelled.get(h.edge_mask())
            if perm is not None:
                inverse = {image: v for v, image in enumerate(perm)}
                return length, tuple(inverse[x] for x in word)
    return None


def _growth_words(n: int, length: int):
    """Words of ``length`` using all letters 0..n-1, letters introduced in order."""
    word = [0] * length

    def rec(i: int, used: int):
        if length - i < n - used:
            return
        if i == length:
            yield tuple(word)
            return
        for x in range(min(used + 1, n)):
            word[i] = x
            yield from rec(i + 1, max(used, x + 1))

    yield from rec(0, 0)
