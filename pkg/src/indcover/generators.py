"""Deterministic instance families."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .bounds import ParameterError
from .graph import Graph


def _nonneg(name: str, value: int) -> None:
    if value < 0:
        raise ParameterError(f"{name} must be non-negative, got {value}")


def gen_path(n: int) -> Graph:
    _nonneg("n", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_forest_of_paths(lengths: Sequence[int]) -> Graph:
    """Disjoint paths laid out in contiguous index blocks, in input order."""
    edges = []
    start = 0
    for a in lengths:
        _nonneg("path length", a)
        edges.extend((start + i, start + i + 1) for i in range(a - 1))
        start += a
    return Graph(start, edges)


def gen_caterpillar(spine_len: int, leaf_counts: Sequence[int]) -> Graph:
    """Path ``0..spine_len-1`` with ``leaf_counts[i]`` pendant vertices on
    spine vertex ``i``; leaves are numbered after the spine, in spine order."""
    _nonneg("spine_len", spine_len)
    if len(leaf_counts) != spine_len:
        raise ParameterError("leaf_counts needs one entry per spine vertex")
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    nxt = spine_len
    for i, count in enumerate(leaf_counts):
        _nonneg("leaf count", count)
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def gen_star(leaves: int) -> Graph:
    _nonneg("leaves", leaves)
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_clique(n: int) -> Graph:
    _nonneg("n", n)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_ternary_tree(h: int) -> Graph:
    """Root 0 joined to the roots of three copies of the height h-1 tree.

    Vertices are numbered in breadth-first order, so the tree has
    (3**(h+1) - 1) / 2 vertices.
    """
    _nonneg("h", h)
    edges = []
    level = [0]
    nxt = 1
    for _ in range(h):
        children = []
        for parent in level:
            for _ in range(3):
                edges.append((parent, nxt))
                children.append(nxt)
                nxt += 1
        level = children
    return Graph(nxt, edges)


def gen_random_degenerate(n: int, c: int, seed: int, connected: bool = False) -> Graph:
    """Each new vertex picks at most ``c`` earlier vertices as neighbours.

    With ``connected=True`` every vertex after the first picks at least one,
    which makes the graph connected.
    """
    _nonneg("n", n)
    _nonneg("c", c)
    rng = np.random.default_rng(seed)
    edges = []
    for v in range(1, n):
        most = min(c, v)
        least = 1 if connected and most > 0 else 0
        r = int(rng.integers(least, most + 1))
        for u in rng.choice(v, size=r, replace=False):
            edges.append((int(u), v))
    return Graph(n, edges)
