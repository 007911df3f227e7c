"""Simple undirected graphs on dense integer vertices and the structural
routines the covering algorithms lean on."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    pass


class InvalidVertexError(GraphError):
    pass


class UndefinedInputError(GraphError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``labels[i]`` is the vertex of the parent graph that vertex ``i`` came
    from when the graph was produced by :func:`induced_subgraph`; for a
    freshly built graph it is the identity.
    """

    __slots__ = ("n", "edges", "adj", "labels")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Optional[Sequence[int]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 0 <= w < n:
                    raise InvalidVertexError(f"vertex {w} out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = tuple(sorted(canon))
        self.adj = tuple(frozenset(a) for a in adj)
        if labels is None:
            labels = range(n)
        self.labels = tuple(labels)
        if len(self.labels) != n:
            raise GraphError("labels must have one entry per vertex")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def non_isolated(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v]]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SeparatorResult:
    """Vertex partition ``(a, b, c)`` where ``c`` separates ``a`` from ``b``."""

    a: frozenset
    b: frozenset
    c: frozenset

    def check(self, g: Graph) -> None:
        if self.a & self.b or self.a & self.c or self.b & self.c:
            raise GraphError("separator parts overlap")
        if len(self.a) + len(self.b) + len(self.c) != g.n:
            raise GraphError("separator parts do not cover the vertex set")
        for u, v in g.edges:
            if (u in self.a and v in self.b) or (u in self.b and v in self.a):
                raise GraphError(f"edge ({u}, {v}) joins a and b")


def _check_vertices(g: Graph, s: Iterable[int]) -> frozenset:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidVertexError(f"vertex {v} out of range for n={g.n}")
    return s


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Return ``G[s]`` re-indexed in ascending order of the original labels.

    The returned graph's ``labels`` map each new index back to ``g``'s own
    ``labels`` so translations compose through repeated restriction.
    """
    s = _check_vertices(g, s)
    order = sorted(s)
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in s and v in s]
    return Graph(len(order), edges, labels=[g.labels[v] for v in order])


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset:
    """Open neighbourhood: vertices outside ``s`` adjacent to some member."""
    s = _check_vertices(g, s)
    out = set()
    for u in s:
        out |= g.adj[u]
    return frozenset(out - s)


def closed_neighborhood(g: Graph, u: int) -> frozenset:
    _check_vertices(g, (u,))
    return g.adj[u] | {u}


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths, stopping at ``cap``.

    Unit-capacity augmenting paths on the split graph: vertex v becomes
    v_in = 2v and v_out = 2v+1 joined by an arc of capacity 1.
    """
    residual: dict[int, dict[int, int]] = {}

    def arc(a, b, c):
        residual.setdefault(a, {})
        residual.setdefault(b, {})
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    big = g.n
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(residual[a]):
                if residual[a][b] > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; ``n - 1`` for complete graphs, 0 if disconnected.

    Only pairs ``(v_i, v_j)`` with ``i <= current best`` and ``j > i`` are
    examined: some ``v_i`` with ``i <= kappa`` lies outside every minimum
    separator, and every earlier vertex then lies inside it.
    """
    if g.n == 0:
        raise UndefinedInputError("vertex connectivity of the empty graph is undefined")
    if not is_connected(g):
        return 0
    best = g.n - 1
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j, best))
        i += 1
    return best


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Repeated minimum-degree removal, ties to the smallest index.

    Returns the removal order and the largest degree seen at removal time,
    which is the degeneracy.
    """
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    order = []
    c = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if alive[u]), key=lambda u: (deg[u], u))
        c = max(c, deg[v])
        alive[v] = False
        order.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return order, c


def maximal_matching_vertex_cover(g: Graph) -> frozenset:
    """Endpoints of the greedy maximal matching over sorted edges."""
    matched = set()
    for u, v in g.edges:
        if u not in matched and v not in matched:
            matched.update((u, v))
    return frozenset(matched)


def caterpillar_spine(g: Graph) -> Optional[tuple[int, ...]]:
    """Spine of a connected caterpillar in path order, or ``None``.

    The spine starts at its smaller-index endpoint. A single edge has the
    empty spine and a single vertex the spine ``(0,)``.
    """
    if not is_tree(g):
        return None
    if g.n <= 2:
        return (0,) if g.n == 1 else ()
    inner = [v for v in range(g.n) if len(g.adj[v]) >= 2]
    inner_set = set(inner)
    inner_deg = {v: len(g.adj[v] & inner_set) for v in inner}
    if any(d > 2 for d in inner_deg.values()):
        return None
    if len(inner) == 1:
        return (inner[0],)
    ends = sorted(v for v in inner if inner_deg[v] == 1)
    # inner vertices of a tree induce a subtree, so degree <= 2 means a path
    path = [ends[0]]
    prev = None
    while len(path) < len(inner):
        cur = path[-1]
        nxt = [w for w in g.adj[cur] if w in inner_set and w != prev]
        prev = cur
        path.append(nxt[0])
    return tuple(path)
