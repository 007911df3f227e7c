"""Covering algorithms: caterpillars, bounded degree, degenerate graphs,
separator recursion, and the clique construction."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .bounds import ParameterError
from .cover import Cover
from .graph import (
    Graph,
    GraphError,
    SeparatorResult,
    caterpillar_spine,
    closed_neighborhood,
    connected_components,
    degeneracy_order,
    induced_subgraph,
    is_connected,
    is_tree,
    maximal_matching_vertex_cover,
)


class NotACaterpillarError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


def _check_k(k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")


def _caterpillar_order(g: Graph, spine: tuple[int, ...]) -> list[int]:
    """Spine vertices in path order, each followed by its leaves."""
    if not spine:
        return [0, 1] if g.n == 2 else list(range(g.n))
    on_spine = set(spine)
    order = []
    for s in spine:
        order.append(s)
        order.extend(sorted(w for w in g.adj[s] if w not in on_spine))
    return order


def cover_caterpillar(g: Graph, k: int) -> Cover:
    """Optimal cover of a connected caterpillar.

    In the spine-then-leaves order every vertex after the first adds
    exactly one edge, to a spine vertex already seen. Cutting that edge
    sequence into runs of ceil((n-1)/k) edges gives subtrees of one more
    vertex each, which meets the connected lower bound.
    """
    _check_k(k)
    spine = caterpillar_spine(g)
    if spine is None:
        raise NotACaterpillarError("graph is not a connected caterpillar")
    if g.m == 0:
        return Cover([()] * k, g)
    order = _caterpillar_order(g, spine)
    pos = {v: i for i, v in enumerate(order)}
    # edge i joins order[i+1] to its earlier neighbour
    edges = []
    for v in order[1:]:
        parent = min(g.adj[v], key=pos.__getitem__)
        edges.append((parent, v))
    per_window = -(-(g.n - 1) // k)
    subsets = []
    for start in range(0, len(edges), per_window):
        window = set()
        for u, v in edges[start:start + per_window]:
            window.update((u, v))
        subsets.append(window)
    subsets.extend(set() for _ in range(k - len(subsets)))
    return Cover(subsets, g)


def cover_bounded_degree(g: Graph, k: int) -> Cover:
    """Closed neighbourhoods of a greedy vertex cover, grouped into k parts.

    Neighbourhoods are dealt round-robin in descending size order, so each
    part unions at most ceil(c/k) of them.
    """
    _check_k(k)
    vc = sorted(maximal_matching_vertex_cover(g))
    hoods = [closed_neighborhood(g, u) for u in vc]
    if len(hoods) <= k:
        return Cover(hoods + [frozenset()] * (k - len(hoods)), g)
    ranked = sorted(range(len(hoods)), key=lambda i: (-len(hoods[i]), i))
    groups = [set() for _ in range(k)]
    for slot, i in enumerate(ranked):
        groups[slot % k] |= hoods[i]
    return Cover(groups, g)


def cover_degenerate(g: Graph, k: int) -> Cover:
    """(c+1)-approximation from a degeneracy ordering.

    Non-isolated vertices are cut into k contiguous blocks of the ordering;
    each block is then closed under forward neighbours of its own members.
    """
    _check_k(k)
    order, _ = degeneracy_order(g)
    order = [v for v in order if g.adj[v]]
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    base, extra = divmod(n, k)
    subsets = []
    start = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        block = order[start:start + size]
        start += size
        members = set(block)
        for v in block:
            for w in sorted(g.adj[v], key=pos.__getitem__):
                if pos[w] > pos[v] and w not in members:
                    members.add(w)
        subsets.append(members)
    return Cover(subsets, g)


@dataclass(frozen=True)
class SeparatorProvider:
    """A separator routine plus the guarantee it claims.

    ``alpha`` bounds each side as a fraction of n; ``size_bound`` describes
    the separator size. ``alpha`` is ``None`` when nothing is promised.
    """

    name: str
    find: Callable[[Graph], SeparatorResult]
    alpha: Optional[Fraction]
    size_bound: str

    def __call__(self, g: Graph) -> SeparatorResult:
        return self.find(g)


def _pack(parts: list[list[int]]) -> tuple[set, set]:
    """Largest-first into the lighter side, ties to ``a``."""
    a, b = set(), set()
    for part in sorted(parts, key=lambda p: (-len(p), p[0])):
        (a if len(a) <= len(b) else b).update(part)
    return a, b


def centroid_separator(g: Graph) -> SeparatorResult:
    """Split a tree at its smallest-index centroid.

    Every branch at the centroid has at most n/2 vertices, so packing them
    largest-first keeps both sides within 2n/3.
    """
    if not is_tree(g):
        raise NotATreeError("centroid separator needs a tree")
    if g.n == 1:
        return SeparatorResult(frozenset(), frozenset(), frozenset({0}))
    root = 0
    parent = [-1] * g.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in sorted(g.adj[u]):
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    sub = [1] * g.n
    for u in reversed(order[1:]):
        sub[parent[u]] += sub[u]
    centroid = None
    for v in range(g.n):
        heaviest = g.n - sub[v] if v != root else 0
        for w in g.adj[v]:
            if parent[w] == v and w != root:
                heaviest = max(heaviest, sub[w])
        if heaviest <= g.n // 2:
            centroid = v
            break
    keep = [v for v in range(g.n) if v != centroid]
    branches = [[keep[v] for v in comp] for comp in connected_components(induced_subgraph(g, keep))]
    a, b = _pack(branches)
    return SeparatorResult(frozenset(a), frozenset(b), frozenset({centroid}))


def bfs_level_separator(g: Graph) -> SeparatorResult:
    """Breadth-first layer from vertex 0 that best balances the two halves.

    The layer minimising max(|before| + |layer|, |after| + |layer|) wins,
    which is the order of the larger recursive subproblem; ties go to the
    earlier layer.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("BFS level separator needs a connected graph")
    depth = [-1] * g.n
    depth[0] = 0
    queue = deque([0])
    layers: list[list[int]] = [[0]]
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if depth[w] == -1:
                depth[w] = depth[u] + 1
                if depth[w] == len(layers):
                    layers.append([])
                layers[depth[w]].append(w)
                queue.append(w)
    best, best_i = None, 0
    before = 0
    for i, layer in enumerate(layers):
        after = g.n - before - len(layer)
        score = max(before, after) + len(layer)
        if best is None or score < best:
            best, best_i = score, i
        before += len(layer)
    a = [v for layer in layers[:best_i] for v in layer]
    b = [v for layer in layers[best_i + 1:] for v in layer]
    return SeparatorResult(frozenset(a), frozenset(b), frozenset(layers[best_i]))


CENTROID = SeparatorProvider("centroid", centroid_separator, Fraction(2, 3), "1")
BFS_LEVEL = SeparatorProvider("bfs-level", bfs_level_separator, None, "one BFS layer")

PROVIDERS = {p.name: p for p in (CENTROID, BFS_LEVEL)}


def _separate(g: Graph, provider: SeparatorProvider) -> SeparatorResult:
    comps = connected_components(g)
    if len(comps) > 1:
        # components are already separated by the empty set
        a, b = _pack(comps)
        return SeparatorResult(frozenset(a), frozenset(b), frozenset())
    return provider(g)


def _separator_subsets(g: Graph, k: int, provider: SeparatorProvider) -> list[set]:
    if k == 1 or g.m == 0:
        return [set(g.non_isolated())] + [set() for _ in range(k - 1)]
    sep = _separate(g, provider)
    a, b = (sep.a, sep.b) if len(sep.a) <= len(sep.b) else (sep.b, sep.a)
    out = []
    for side, parts in ((a, k // 2), (b, k - k // 2)):
        back = sorted(side | sep.c)
        sub = induced_subgraph(g, back)
        for s in _separator_subsets(sub, parts, provider):
            out.append({back[v] for v in s})
    return out


def cover_separator(g: Graph, k: int, provider: SeparatorProvider = CENTROID) -> Cover:
    """Recursive halving along separators: floor(k/2) parts for the smaller
    side plus the separator, ceil(k/2) for the larger side plus the separator."""
    _check_k(k)
    return Cover(_separator_subsets(g, k, provider), g)


def cover_clique(n: int, k: int) -> Cover:
    """Cover K_n by unions of group pairs, with g(g+1)/2 <= k groups' worth of slots."""
    if n < 1:
        raise ParameterError(f"n must be at least 1, got {n}")
    _check_k(k)
    groups_n = 1
    while (groups_n + 1) * (groups_n + 2) // 2 <= k:
        groups_n += 1
    groups_n = min(groups_n, n)
    base, extra = divmod(n, groups_n)
    groups = []
    start = 0
    for i in range(groups_n):
        size = base + (1 if i < extra else 0)
        groups.append(set(range(start, start + size)))
        start += size
    subsets = []
    for i in range(groups_n):
        for j in range(i + 1, groups_n):
            subsets.append(groups[i] | groups[j])
    subsets.extend(set(grp) for grp in groups)
    subsets.extend(set() for _ in range(k - len(subsets)))
    host = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    return Cover(subsets, host)
