"""Exact optimum by exhaustive search over edge colourings (desk scale)."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from . import kernels
from ._accel import JIT_ENABLED
from .bounds import ParameterError, best_lower_bound, complete_rho
from .cover import Cover
from .graph import Graph


class BudgetExhaustedError(RuntimeError):
    """The search hit its node or time limit before deciding."""


class InfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 500_000_000
    time_budget: float = 300.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_budget <= 0:
            raise ParameterError("search limits must be positive")


@dataclass
class ExactResult:
    cost: int
    cover: Cover
    nodes_explored: int


class _Budget:
    def __init__(self, limits: SearchLimits):
        self.limits = limits
        self.deadline = time.monotonic() + limits.time_budget
        self.nodes = 0

    def remaining_nodes(self) -> int:
        return self.limits.max_nodes - self.nodes

    def check(self) -> None:
        if self.nodes >= self.limits.max_nodes:
            raise BudgetExhaustedError(f"node budget of {self.limits.max_nodes} exhausted")
        if time.monotonic() > self.deadline:
            raise BudgetExhaustedError(f"time budget of {self.limits.time_budget}s exhausted")


def search_order(g: Graph) -> list[tuple[int, int]]:
    """Edges by descending endpoint-degree sum, ties in canonical order."""
    return sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))


def _feasible(g: Graph, k: int, m: int, budget: _Budget) -> Optional[Cover]:
    if g.m == 0:
        return Cover([()] * k, g)
    if m < 2:
        return None
    edges = search_order(g)
    search = kernels.ColoringSearch(g.n, [u for u, _ in edges], [v for _, v in edges], k, m)
    chunk = 2_000_000 if JIT_ENABLED else 20_000
    while True:
        budget.check()
        before = search.nodes
        status = search.run(min(chunk, budget.remaining_nodes()))
        budget.nodes += search.nodes - before
        if status == kernels.FOUND:
            subsets = [set() for _ in range(k)]
            for (u, v), c in zip(edges, search.colouring()):
                subsets[c].update((u, v))
            return Cover(subsets, g)
        if status == kernels.INFEASIBLE:
            return None


def exact_feasible(g: Graph, k: int, m: int, limits: Optional[SearchLimits] = None) -> Optional[Cover]:
    """A cover with ``k`` subsets of order at most ``m``, or ``None``.

    Raises :class:`BudgetExhaustedError` if the limits run out first, so
    ``None`` always means proven infeasible.
    """
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if m < 0:
        raise ParameterError(f"m must be non-negative, got {m}")
    return _feasible(g, k, m, _Budget(limits or SearchLimits()))


def exact_opt(g: Graph, k: int, limits: Optional[SearchLimits] = None) -> ExactResult:
    """Optimum cost with a witness cover, by ascending search on the cap.

    Starting from the best lower bound, each failed cap is a certificate
    that the returned cost cannot be lowered by one.
    """
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    budget = _Budget(limits or SearchLimits())
    if g.m == 0:
        return ExactResult(0, Cover([()] * k, g), 0)
    m = max(best_lower_bound(g, k).best, 2)
    while True:
        cover = _feasible(g, k, m, budget)
        if cover is not None:
            return ExactResult(m, cover, budget.nodes)
        m += 1


def exact_dual(g: Graph, m: int, limits: Optional[SearchLimits] = None) -> tuple[int, Cover]:
    """Fewest subsets of order at most ``m`` that cover ``g``."""
    if g.m == 0:
        return 0, Cover([], g)
    if m < 2:
        raise InfeasibleError(f"subsets of order {m} cannot hold an edge")
    budget = _Budget(limits or SearchLimits())
    p = max(1, -(-g.m // complete_rho(m)))
    while True:
        cover = _feasible(g, p, m, budget)
        if cover is not None:
            return p, cover
        p += 1
