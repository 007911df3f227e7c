"""Text formats and report emission.

All external vertex labels are 1-indexed; everything inside the package is
0-indexed. This module is the only place the two meet.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bounds import BoundReport
from .cover import Cover
from .graph import Graph
from .hypergraph import HyperCover, Hypergraph, HypergraphError
from .reductions import InvalidInstanceError, ThreePartitionInstance


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    """Parse ``p edge n m`` followed by ``e u v`` lines; ``c`` lines are comments."""
    n = declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("second header line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("header must read 'p edge <n> <m>'", lineno)
            n, declared = _ints(tokens[2:], lineno)
            if n < 0 or declared < 0:
                raise ParseError("negative counts in header", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(tokens) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            u, v = _ints(tokens[1:], lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    # a header may count listed lines or distinct edges
    if declared not in (len(edges), len({tuple(sorted(e)) for e in edges})):
        raise ParseError(f"header declares {declared} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_cover(text: str, g: Graph) -> Cover:
    """First line ``k``, then one line of vertices per subset (blank = empty)."""
    lines = text.split("\n")
    head = lines[0].split()
    if len(head) != 1:
        raise ParseError("first line must hold k", 1)
    (k,) = _ints(head, 1)
    if k < 0:
        raise ParseError("k must be non-negative", 1)
    body = lines[1:]
    extra = [i for i, line in enumerate(body[k:], k + 2) if line.strip()]
    if extra:
        raise ParseError(f"more than {k} subset lines", extra[0])
    body += [""] * (k - len(body))
    subsets = []
    for lineno, line in enumerate(body[:k], 2):
        vs = _ints(line.split(), lineno)
        for v in vs:
            if not 1 <= v <= g.n:
                raise ParseError(f"vertex {v} out of range 1..{g.n}", lineno)
        subsets.append([v - 1 for v in vs])
    return Cover(subsets, g)


def format_cover(c: Cover) -> str:
    lines = [str(c.k)]
    lines.extend(" ".join(str(v + 1) for v in s) for s in c.sorted_subsets())
    return "\n".join(lines) + "\n"


def parse_three_partition(text: str) -> ThreePartitionInstance:
    """``m S`` on the first line, the 3m values on the second."""
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise ParseError("expected exactly two non-blank lines")
    head = _ints(lines[0].split(), 1)
    if len(head) != 2:
        raise ParseError("first line must read 'm S'", 1)
    try:
        return ThreePartitionInstance(head[0], head[1], _ints(lines[1].split(), 2))
    except InvalidInstanceError as exc:
        raise ParseError(str(exc)) from None


def format_three_partition(inst: ThreePartitionInstance) -> str:
    return f"{inst.m} {inst.s}\n{' '.join(map(str, inst.values))}\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """``n p`` then one hyperedge per line as 1-indexed vertices."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty hypergraph file")
    head = _ints(lines[0].split(), 1)
    if len(head) != 2:
        raise ParseError("first line must read 'n p'", 1)
    n, p = head
    if len(lines) - 1 != p:
        raise ParseError(f"header declares {p} hyperedges, found {len(lines) - 1}")
    edges = []
    for lineno, line in enumerate(lines[1:], 2):
        edges.append([v - 1 for v in _ints(line.split(), lineno)])
    try:
        return Hypergraph(n, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h.hyperedges)}"]
    lines.extend(" ".join(str(v + 1) for v in sorted(e)) for e in h.hyperedges)
    return "\n".join(lines) + "\n"


def parse_hypercover(text: str, h: Hypergraph, size_cap: Optional[int] = None) -> HyperCover:
    cover = parse_cover(text, Graph(h.n))
    return HyperCover(cover.subsets, size_cap)


@dataclass
class RunReport:
    algorithm: str
    k: int
    cost: int
    subsets: list
    bounds: BoundReport
    valid: bool
    seed: int
    timing: float = 0.0
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_cover(cls, algorithm: str, cover: Cover, bounds: BoundReport, valid: bool, seed: int, timing: float = 0.0):
        subsets = [[v + 1 for v in s] for s in cover.sorted_subsets()]
        return cls(algorithm, cover.k, cover.cost, subsets, bounds, valid, seed, timing)


def bounds_document(b: BoundReport) -> dict:
    doc = dict(b.values())
    doc["best"] = b.best
    return doc


def emit_report(r: RunReport) -> str:
    """Stable JSON rendering; timing is left out so output is reproducible."""
    doc = {
        "algorithm": r.algorithm,
        "k": r.k,
        "cost": r.cost,
        "subsets": [sorted(s) for s in r.subsets],
        "bounds": bounds_document(r.bounds),
        "valid": r.valid,
        "seed": r.seed,
    }
    doc.update(r.extra)
    return dump(doc)


def dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"

