"""Hot inner loops.

Each kernel has a numba-compiled form and a plain form. The plain forms
are what run when ``INDCOVER_DISABLE_JIT`` is set; ``benchmarks/`` times
one against the other.
"""
import numpy as np

from ._accel import JIT_ENABLED, njit

FOUND = 0
INFEASIBLE = 1
PAUSED = 2


def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


_popcount_jit = njit(_popcount)


@njit
def _neighborhood_max_jit(nbr):
    n = nbr.shape[0]
    size = 1 << n
    reach = np.zeros(size, dtype=np.int64)
    for b in range(n):
        lo = 1 << b
        for j in range(lo):
            reach[lo + j] = reach[j] | nbr[b]
    best = -1
    best_mask = 0
    for mask in range(size):
        val = _popcount_jit(mask) + _popcount_jit(reach[mask] & ~mask)
        if val > best:
            best = val
            best_mask = mask
    return best, best_mask


def _neighborhood_max_numpy(nbr):
    n = len(nbr)
    reach = np.zeros(1 << n, dtype=np.uint64)
    for b in range(n):
        lo = 1 << b
        reach[lo:2 * lo] = reach[:lo] | np.uint64(nbr[b])
    masks = np.arange(1 << n, dtype=np.uint64)
    vals = np.bitwise_count(masks) + np.bitwise_count(reach & ~masks)
    i = int(np.argmax(vals))
    return int(vals[i]), i


def neighborhood_max(nbr, use_jit=None):
    """Maximise ``|S| + |N(S)|`` over every vertex bitmask ``S``.

    ``nbr[v]`` is the neighbour bitmask of vertex ``v``. Returns the maximum
    and the smallest mask attaining it.
    """
    nbr = np.asarray(nbr, dtype=np.int64)
    if nbr.shape[0] == 0:
        return 0, 0
    if JIT_ENABLED if use_jit is None else use_jit:
        best, mask = _neighborhood_max_jit(nbr)
        return int(best), int(mask)
    return _neighborhood_max_numpy(nbr)


def _search_py(eu, ev, k, m, cnt, size, incount, choice, forced, opened, state, node_limit):
    """Resumable depth-first search over edge colourings.

    Colour ``c`` of an edge puts both endpoints in subset ``c``. ``state``
    holds ``[depth, uncovered, total_size]`` so a paused call can be
    resumed with the same arrays; ``uncovered`` counts edge endpoints not
    yet in any subset. Returns ``(status, nodes)``.
    """
    n_edges = eu.shape[0]
    d = state[0]
    uncovered = state[1]
    total = state[2]
    nodes = 0
    while True:
        if d == n_edges:
            state[0] = d
            state[1] = uncovered
            state[2] = total
            return FOUND, nodes
        if d < 0:
            state[0] = d
            return INFEASIBLE, nodes
        if nodes >= node_limit:
            state[0] = d
            state[1] = uncovered
            state[2] = total
            return PAUSED, nodes
        u = eu[d]
        v = ev[d]
        c = choice[d]
        if c >= 0:
            # backtracking into d: take the current colour off
            cnt[c, u] -= 1
            if cnt[c, u] == 0:
                size[c] -= 1
                total -= 1
                incount[u] -= 1
                if incount[u] == 0:
                    uncovered += 1
            cnt[c, v] -= 1
            if cnt[c, v] == 0:
                size[c] -= 1
                total -= 1
                incount[v] -= 1
                if incount[v] == 0:
                    uncovered += 1
            nxt = k if forced[d] else c + 1
        else:
            if d == 0:
                opened[0] = 0
            else:
                prev = choice[d - 1] + 1
                opened[d] = opened[d - 1] if opened[d - 1] > prev else prev
            # an edge already inside an open subset costs nothing there
            nxt = -1
            for f in range(opened[d]):
                if cnt[f, u] > 0 and cnt[f, v] > 0:
                    nxt = f
                    break
            if nxt >= 0:
                forced[d] = True
            else:
                forced[d] = False
                nxt = 0
        if forced[d]:
            lim = nxt + 1 if nxt < k else k
        else:
            lim = opened[d] + 1 if opened[d] < k else k
        placed = False
        while nxt < lim:
            nodes += 1
            cnt[nxt, u] += 1
            if cnt[nxt, u] == 1:
                size[nxt] += 1
                total += 1
                incount[u] += 1
                if incount[u] == 1:
                    uncovered -= 1
            cnt[nxt, v] += 1
            if cnt[nxt, v] == 1:
                size[nxt] += 1
                total += 1
                incount[v] += 1
                if incount[v] == 1:
                    uncovered -= 1
            if size[nxt] <= m and k * m - total >= uncovered:
                placed = True
                break
            cnt[nxt, u] -= 1
            if cnt[nxt, u] == 0:
                size[nxt] -= 1
                total -= 1
                incount[u] -= 1
                if incount[u] == 0:
                    uncovered += 1
            cnt[nxt, v] -= 1
            if cnt[nxt, v] == 0:
                size[nxt] -= 1
                total -= 1
                incount[v] -= 1
                if incount[v] == 0:
                    uncovered += 1
            nxt += 1
        if placed:
            choice[d] = nxt
            d += 1
            if d < n_edges:
                choice[d] = -1
        else:
            choice[d] = -1
            d -= 1


_search_jit = njit(_search_py)


class ColoringSearch:
    """Incremental driver around the colouring kernel.

    Call :meth:`run` repeatedly with a node allowance until it reports
    ``FOUND`` or ``INFEASIBLE``; the arrays carry the search between calls.
    """

    def __init__(self, n, eu, ev, k, m, use_jit=None):
        self.eu = np.ascontiguousarray(eu, dtype=np.int64)
        self.ev = np.ascontiguousarray(ev, dtype=np.int64)
        self.k = int(k)
        self.m = int(m)
        n_edges = self.eu.shape[0]
        endpoints = np.union1d(self.eu, self.ev)
        self.cnt = np.zeros((self.k, n), dtype=np.int64)
        self.size = np.zeros(self.k, dtype=np.int64)
        self.incount = np.zeros(n, dtype=np.int64)
        self.choice = np.full(max(n_edges, 1), -1, dtype=np.int64)
        self.forced = np.zeros(max(n_edges, 1), dtype=np.bool_)
        self.opened = np.zeros(max(n_edges, 1), dtype=np.int64)
        self.state = np.array([0, endpoints.shape[0], 0], dtype=np.int64)
        self.nodes = 0
        self.status = PAUSED
        self._kernel = _search_jit if (JIT_ENABLED if use_jit is None else use_jit) else _search_py

    def run(self, node_limit):
        if self.status != PAUSED:
            return self.status
        status, nodes = self._kernel(
            self.eu, self.ev, self.k, self.m, self.cnt, self.size, self.incount,
            self.choice, self.forced, self.opened, self.state, int(node_limit),
        )
        self.nodes += int(nodes)
        self.status = int(status)
        return self.status

    def colouring(self):
        return self.choice[: self.eu.shape[0]].copy()
