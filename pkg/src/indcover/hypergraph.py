"""Hypergraphs, covers of them by capped vertex subsets, and containment
normalisation. There is no covering optimiser here."""
from __future__ import annotations

from typing import Iterable, Optional


class HypergraphError(ValueError):
    pass


class CapViolationError(HypergraphError):
    def __init__(self, offenders: list[int], cap: int):
        self.offenders = offenders
        self.cap = cap
        super().__init__(f"subsets {offenders} exceed the size cap {cap}")


class Hypergraph:
    __slots__ = ("n", "hyperedges")

    def __init__(self, n: int, hyperedges: Iterable[Iterable[int]]):
        if n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {n}")
        edges = []
        seen = set()
        for e in hyperedges:
            e = frozenset(int(v) for v in e)
            if len(e) < 2:
                raise HypergraphError(f"hyperedge {sorted(e)} has fewer than two vertices")
            if any(not 0 <= v < n for v in e):
                raise HypergraphError(f"hyperedge {sorted(e)} leaves the vertex range 0..{n - 1}")
            if e in seen:
                raise HypergraphError(f"duplicate hyperedge {sorted(e)}")
            seen.add(e)
            edges.append(e)
        self.n = n
        self.hyperedges = tuple(edges)

    @classmethod
    def from_graph(cls, g) -> "Hypergraph":
        return cls(g.n, g.edges)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and set(self.hyperedges) == set(other.hyperedges)

    def __repr__(self):
        return f"Hypergraph(n={self.n}, p={len(self.hyperedges)})"


class HyperCover:
    __slots__ = ("subsets", "size_cap")

    def __init__(self, subsets: Iterable[Iterable[int]], size_cap: Optional[int] = None):
        self.subsets = tuple(frozenset(s) for s in subsets)
        self.size_cap = size_cap


def normalize(h: Hypergraph) -> Hypergraph:
    """Drop every hyperedge strictly contained in another one."""
    keep = [e for e in h.hyperedges if not any(e < f for f in h.hyperedges)]
    return Hypergraph(h.n, keep)


def validate_hypercover(h: Hypergraph, c: HyperCover) -> list[frozenset]:
    """Hyperedges contained in no subset of ``c``.

    Subsets above the cover's size cap raise :class:`CapViolationError`.
    """
    for i, s in enumerate(c.subsets):
        if any(not 0 <= v < h.n for v in s):
            raise HypergraphError(f"subset {i} leaves the vertex range")
    if c.size_cap is not None:
        offenders = [i for i, s in enumerate(c.subsets) if len(s) > c.size_cap]
        if offenders:
            raise CapViolationError(offenders, c.size_cap)
    return [e for e in h.hyperedges if not any(e <= s for s in c.subsets)]
