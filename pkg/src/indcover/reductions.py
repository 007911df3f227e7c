"""3-Partition instances, their reduction to covering a forest of paths,
and the map from cheap covers back to 3-Partition solutions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cover import Cover, cover_cost, validate_cover
from .graph import Graph
from .generators import gen_forest_of_paths

BRUTE_FORCE_LIMIT = 12


class InvalidInstanceError(ValueError):
    pass


class MismatchedInstanceError(ValueError):
    pass


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class ThreePartitionInstance:
    m: int
    s: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(a) for a in self.values))
        if self.m < 1:
            raise InvalidInstanceError(f"m must be positive, got {self.m}")
        if len(self.values) != 3 * self.m:
            raise InvalidInstanceError(f"expected {3 * self.m} values, got {len(self.values)}")
        for a in self.values:
            # s/4 < a < s/2, kept in integers
            if not (self.s < 4 * a and 2 * a < self.s):
                raise InvalidInstanceError(f"value {a} is not strictly between {self.s}/4 and {self.s}/2")
        if sum(self.values) != self.m * self.s:
            raise InvalidInstanceError(f"values sum to {sum(self.values)}, expected {self.m * self.s}")

    def offsets(self) -> list[int]:
        out, start = [], 0
        for a in self.values:
            out.append(start)
            start += a
        return out

    def check(self, sol: "ThreePartitionSolution") -> bool:
        seen = sorted(i for triple in sol.groups for i in triple)
        if seen != list(range(3 * self.m)) or len(sol.groups) != self.m:
            return False
        return all(len(t) == 3 and sum(self.values[i] for i in t) == self.s for t in sol.groups)


@dataclass(frozen=True)
class ThreePartitionSolution:
    """Triples of 0-based value indices, each sorted, listed in ascending order."""

    groups: tuple

    def __post_init__(self):
        groups = tuple(sorted(tuple(sorted(t)) for t in self.groups))
        if any(len(t) != 3 for t in groups):
            raise InvalidInstanceError("every group of a 3-Partition solution has exactly three values")
        object.__setattr__(self, "groups", groups)

    def values(self, inst: ThreePartitionInstance) -> list[tuple[int, ...]]:
        return [tuple(inst.values[i] for i in t) for t in self.groups]


def reduce_3partition(inst: ThreePartitionInstance) -> tuple[Graph, int, int]:
    """Forest with one path of ``a_i`` vertices per value, ``k = m``, target ``s``."""
    if inst.s < 4:
        # only s = 3 with all values 1: paths would be isolated vertices
        raise InvalidInstanceError("instances with s < 4 reduce to an edgeless forest")
    return gen_forest_of_paths(inst.values), inst.m, inst.s


def lift_cover_to_partition(inst: ThreePartitionInstance, cover: Cover) -> Optional[ThreePartitionSolution]:
    """Read a 3-Partition solution off a valid cover of cost at most ``s``.

    At that cost the subset sizes sum to at most m*s while every one of the
    m*s vertices lies in some subset, so each vertex lies in exactly one and
    every path sits inside a single subset.
    """
    g = cover.host
    if g.n != sum(inst.values) or cover.k != inst.m:
        raise MismatchedInstanceError("cover does not match the reduced instance")
    if validate_cover(g, cover) or cover_cost(cover) > inst.s:
        return None
    incidence = [0] * g.n
    for subset in cover.subsets:
        for v in subset:
            incidence[v] += 1
    assert all(c >= 1 for c in incidence), "a vertex of positive degree is in no subset"
    assert sum(incidence) == inst.m * inst.s
    owner = {}
    for j, subset in enumerate(cover.subsets):
        for v in subset:
            owner[v] = j
    groups = [[] for _ in range(inst.m)]
    for i, start in enumerate(inst.offsets()):
        homes = {owner[v] for v in range(start, start + inst.values[i])}
        assert len(homes) == 1, f"path {i} is split across subsets"
        groups[homes.pop()].append(i)
    sol = ThreePartitionSolution(groups)
    assert inst.check(sol)
    return sol


def brute_3partition(inst: ThreePartitionInstance) -> Optional[ThreePartitionSolution]:
    """Lexicographically smallest solution by exhaustive triple search."""
    if len(inst.values) > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"brute force is limited to {BRUTE_FORCE_LIMIT} values")
    vals = inst.values

    def solve(remaining: Sequence[int]) -> Optional[list]:
        if not remaining:
            return []
        i, rest = remaining[0], remaining[1:]
        for x in range(len(rest)):
            for y in range(x + 1, len(rest)):
                if vals[i] + vals[rest[x]] + vals[rest[y]] == inst.s:
                    tail = solve([r for z, r in enumerate(rest) if z not in (x, y)])
                    if tail is not None:
                        return [(i, rest[x], rest[y])] + tail
        return None

    found = solve(list(range(len(vals))))
    return None if found is None else ThreePartitionSolution(found)
