"""Lower bounds on the optimum cost of covering G with k induced subgraphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import kernels
from .graph import Graph, induced_subgraph, is_connected, neighborhood, vertex_connectivity

EXACT_NEIGHBORHOOD_LIMIT = 20


class ParameterError(ValueError):
    pass


class NoCertificateError(ValueError):
    pass


def complete_rho(m: int) -> int:
    """Edge count of a clique on ``m`` vertices, the default density cap."""
    return m * (m - 1) // 2


@dataclass
class BoundReport:
    lb_trivial: int
    lb_connected: Optional[int]
    lb_connectivity: Optional[int]
    lb_density: int
    lb_neighborhood: int
    neighborhood_exact: bool
    best: int
    witnesses: dict = field(default_factory=dict)

    def values(self) -> dict:
        return {
            "trivial": self.lb_trivial,
            "connected": self.lb_connected,
            "connectivity": self.lb_connectivity,
            "density": self.lb_density,
            "neighborhood": self.lb_neighborhood,
        }


def _check_k(k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")


def lb_trivial(n: int, k: int) -> int:
    _check_k(k)
    return -(-n // k)


def lb_connected(g: Graph, k: int) -> Optional[int]:
    """Mean bound from a connected intersection graph: ceil((n+k-1)/k)."""
    _check_k(k)
    if g.n < 2 or not is_connected(g):
        return None
    return -(-(g.n + k - 1) // k)


def lb_connectivity(g: Graph, k: int, kappa: Optional[int] = None) -> Optional[int]:
    """min(n - kappa, ceil(n/k + kappa/2), ceil(2n/k)) for connected ``g``.

    Pad every subset to the optimum order M. If M < n - kappa, each subset
    shares at least min(M, kappa) of its vertices with other subsets, so
    kM >= n + k*min(M, kappa)/2. The ceil(2n/k) term is the M < kappa
    branch; without it the bound overshoots once k > 2n/kappa (for example
    a 3-connected graph on 6 vertices with 10 edges and k = 10).
    """
    _check_k(k)
    if g.n < 2 or not is_connected(g):
        return None
    if kappa is None:
        kappa = vertex_connectivity(g)
    # ceil(n/k + kappa/2) == ceil((2n + k*kappa) / 2k)
    shared = -(-(2 * g.n + k * kappa) // (2 * k))
    small = -(-(2 * g.n) // k)
    return min(g.n - kappa, shared, small)


def lb_density(g: Graph, k: int, rho: Optional[Callable[[int], int]] = None) -> int:
    """Smallest m such that k subsets of order m can hold every edge."""
    _check_k(k)
    rho = rho or complete_rho
    for m in range(g.n + 1):
        if k * rho(m) >= g.m:
            return m
    raise NoCertificateError(f"k * rho(m) never reaches e(G) = {g.m} for m <= n")


def _closure_size(g: Graph, s) -> int:
    return len(s) + len(neighborhood(g, s))


def _local_search(g: Graph, restarts: int, seed: int) -> tuple[int, frozenset]:
    rng = np.random.default_rng(seed)
    best_val, best_set = -1, frozenset()
    for _ in range(max(restarts, 1)):
        s = set(np.flatnonzero(rng.random(g.n) < 0.5).tolist())
        val = _closure_size(g, s)
        while True:
            step_val, step_v = val, None
            for v in range(g.n):
                trial = s ^ {v}
                tv = _closure_size(g, trial)
                if tv > step_val:
                    step_val, step_v = tv, v
            if step_v is None:
                break
            s ^= {step_v}
            val = step_val
        if val > best_val:
            best_val, best_set = val, frozenset(s)
    return best_val, best_set


def lb_neighborhood(g: Graph, k: int, restarts: int = 8, seed: int = 0) -> tuple[int, frozenset, bool]:
    """ceil(max_S (|S| + |N(S)|) / k), with the maximising S.

    Exhaustive up to ``EXACT_NEIGHBORHOOD_LIMIT`` vertices, otherwise the
    best result of seeded steepest-ascent restarts. Since S = V scores n,
    the value never exceeds ceil(n/k).
    """
    _check_k(k)
    if g.n <= EXACT_NEIGHBORHOOD_LIMIT:
        nbr = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
        val, mask = kernels.neighborhood_max(nbr)
        witness = frozenset(v for v in range(g.n) if mask >> v & 1)
        exact = True
    else:
        val, witness = _local_search(g, restarts, seed)
        exact = False
    return -(-val // k), witness, exact


def best_lower_bound(g: Graph, k: int, restarts: int = 8, seed: int = 0) -> BoundReport:
    """Evaluate every applicable bound and keep the largest.

    Bounds driven by vertex counts see only non-isolated vertices, since
    isolated ones need not be placed anywhere. The connectivity-based
    bounds are skipped for disconnected graphs.
    """
    _check_k(k)
    if g.m == 0:
        # nothing to cover: every bound collapses to 0
        return BoundReport(0, 0, 0, 0, 0, True, 0, {"kappa": None, "density_m": 0, "neighborhood_set": []})
    core_vertices = g.non_isolated()
    core = induced_subgraph(g, core_vertices)
    trivial = lb_trivial(core.n, k)
    connected = lb_connected(g, k)
    kappa = None
    connectivity = None
    if connected is not None:
        kappa = vertex_connectivity(g)
        connectivity = lb_connectivity(g, k, kappa)
    density = lb_density(g, k)
    neigh, witness, exact = lb_neighborhood(core, k, restarts=restarts, seed=seed)
    present = [v for v in (trivial, connected, connectivity, density, neigh) if v is not None]
    return BoundReport(
        lb_trivial=trivial,
        lb_connected=connected,
        lb_connectivity=connectivity,
        lb_density=density,
        lb_neighborhood=neigh,
        neighborhood_exact=exact,
        best=max(present),
        witnesses={
            "kappa": kappa,
            "density_m": density,
            "neighborhood_set": sorted(core_vertices[v] for v in witness),
        },
    )
