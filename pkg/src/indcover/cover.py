"""Covers of a graph by k vertex subsets and their cost."""
from __future__ import annotations

from typing import Iterable

from .graph import Graph


class InvalidCoverError(ValueError):
    pass


class Cover:
    """Ordered list of vertex subsets covering ``host``.

    Unused slots are empty subsets; the number of slots is the problem's k.
    """

    __slots__ = ("subsets", "host")

    def __init__(self, subsets: Iterable[Iterable[int]], host: Graph):
        self.subsets = tuple(frozenset(int(v) for v in s) for s in subsets)
        self.host = host
        for i, s in enumerate(self.subsets):
            bad = [v for v in s if not 0 <= v < host.n]
            if bad:
                raise InvalidCoverError(f"subset {i} contains out-of-range vertices {sorted(bad)}")

    @property
    def k(self) -> int:
        return len(self.subsets)

    @property
    def cost(self) -> int:
        return cover_cost(self)

    def sorted_subsets(self) -> list[list[int]]:
        return [sorted(s) for s in self.subsets]

    def __eq__(self, other):
        if not isinstance(other, Cover):
            return NotImplemented
        return self.subsets == other.subsets and self.host == other.host

    def __repr__(self):
        return f"Cover(k={self.k}, cost={self.cost}, subsets={self.sorted_subsets()})"


def validate_cover(g: Graph, c: Cover) -> list[tuple[int, int]]:
    """Edges of ``g`` that no subset of ``c`` contains; empty means valid."""
    if c.host is not g and c.host != g:
        raise InvalidCoverError("cover was built for a different graph")
    for i, s in enumerate(c.subsets):
        if any(not 0 <= v < g.n for v in s):
            raise InvalidCoverError(f"subset {i} references a vertex outside the graph")
    return [(u, v) for u, v in g.edges if not any(u in s and v in s for s in c.subsets)]


def cover_cost(c: Cover) -> int:
    return max((len(s) for s in c.subsets), default=0)


def pad_equalize(g: Graph, c: Cover) -> Cover:
    """Fill every subset up to the cover's cost with smallest-index vertices."""
    if validate_cover(g, c):
        raise InvalidCoverError("only valid covers can be padded")
    target = cover_cost(c)
    padded = []
    for s in c.subsets:
        s = set(s)
        v = 0
        while len(s) < target:
            s.add(v)
            v += 1
        padded.append(s)
    return Cover(padded, g)
