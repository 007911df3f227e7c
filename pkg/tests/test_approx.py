import itertools
import random

import pytest
from hypothesis import given, strategies as st

from indcover.approx import (
    BFS_LEVEL,
    CENTROID,
    DisconnectedGraphError,
    NotACaterpillarError,
    NotATreeError,
    bfs_level_separator,
    centroid_separator,
    cover_bounded_degree,
    cover_caterpillar,
    cover_clique,
    cover_degenerate,
    cover_separator,
)
from indcover.bounds import ParameterError, lb_connected, lb_density
from indcover.cover import cover_cost, validate_cover
from indcover.exact import exact_opt
from indcover.generators import (
    gen_caterpillar,
    gen_clique,
    gen_cycle,
    gen_path,
    gen_random_degenerate,
    gen_star,
)
from indcover.graph import Graph, degeneracy_order, is_connected, maximal_matching_vertex_cover
from oracles import graphs, opt_brute


def valid(g, c, k):
    return validate_cover(g, c) == [] and c.k == k


def random_tree(n, rng):
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


class TestCaterpillar:
    def test_p6(self):
        c = cover_caterpillar(gen_path(6), 2)
        assert c.sorted_subsets() == [[0, 1, 2, 3], [3, 4, 5]]

    def test_p5_beats_the_stated_formula(self):
        assert opt_brute(gen_path(5), 2) == 3
        c = cover_caterpillar(gen_path(5), 2)
        assert c.sorted_subsets() == [[0, 1, 2], [2, 3, 4]]

    def test_leafy_spine(self):
        # spine 0-1 with leaves 3,4 on 0 and 2,5 on 1
        g = gen_caterpillar(3, (2, 1, 0))
        c = cover_caterpillar(g, 2)
        assert c.sorted_subsets() == [[0, 1, 3, 4], [1, 2, 5]]
        assert lb_connected(g, 2) == 4

    def test_errors(self):
        with pytest.raises(NotACaterpillarError):
            cover_caterpillar(gen_cycle(4), 2)
        with pytest.raises(NotACaterpillarError):
            cover_caterpillar(Graph(4, [(0, 1), (2, 3)]), 2)
        with pytest.raises(ParameterError):
            cover_caterpillar(gen_path(3), 0)

    def test_small(self):
        assert cover_cost(cover_caterpillar(Graph(1), 3)) == 0
        assert cover_caterpillar(Graph(2, [(0, 1)]), 2).sorted_subsets() == [[0, 1], []]

    def test_no_edge_covered_twice(self):
        g = gen_caterpillar(4, (1, 2, 0, 2))
        for k in range(1, 5):
            c = cover_caterpillar(g, k)
            for u, v in g.edges:
                assert sum(1 for s in c.subsets if u in s and v in s) == 1

    @given(st.integers(1, 5).flatmap(lambda s: st.lists(st.integers(0, 2), min_size=s, max_size=s)),
           st.integers(1, 4))
    def test_matches_brute_force(self, leaves, k):
        g = gen_caterpillar(len(leaves), leaves)
        if g.n < 2 or g.m > 9:
            return
        c = cover_caterpillar(g, k)
        assert valid(g, c, k)
        assert cover_cost(c) == opt_brute(g, k) == -(-(g.n + k - 1) // k)


class TestBoundedDegree:
    def test_examples(self):
        assert cover_bounded_degree(gen_path(4), 1).sorted_subsets() == [[0, 1, 2, 3]]
        c = cover_bounded_degree(Graph(2, [(0, 1)]), 2)
        assert cover_cost(c) == 2 and valid(Graph(2, [(0, 1)]), c, 2)
        star = gen_star(4)
        assert cover_cost(cover_bounded_degree(star, 2)) == 5
        # two leaves per subset: the optimum is 3, below the star's 4 vertices
        assert opt_brute(star, 2) == 3 == exact_opt(star, 2).cost

    def test_bad_k(self):
        with pytest.raises(ParameterError):
            cover_bounded_degree(gen_path(3), 0)

    @given(graphs(max_n=12), st.integers(1, 5))
    def test_guarantee(self, g, k):
        c = cover_bounded_degree(g, k)
        assert valid(g, c, k)
        vc = len(maximal_matching_vertex_cover(g))
        assert cover_cost(c) <= -(-vc // k) * (g.max_degree + 1)


class TestDegenerate:
    def test_examples(self):
        p6 = cover_degenerate(gen_path(6), 2)
        assert valid(gen_path(6), p6, 2) and cover_cost(p6) <= 6
        assert cover_cost(cover_degenerate(gen_clique(4), 2)) <= 4
        c4 = cover_degenerate(gen_cycle(4), 2)
        assert c4.sorted_subsets() == [[0, 1, 2, 3], [2, 3]]

    def test_bad_k(self):
        with pytest.raises(ParameterError):
            cover_degenerate(gen_path(3), 0)

    @given(graphs(max_n=12), st.integers(1, 5))
    def test_guarantee(self, g, k):
        c = cover_degenerate(g, k)
        assert valid(g, c, k)
        deg = degeneracy_order(g)[1]
        active = len(g.non_isolated())
        assert cover_cost(c) <= (deg + 1) * -(-active // k)

    @given(graphs(min_n=2, max_n=8, max_edges=9), st.integers(1, 3))
    def test_ratio(self, g, k):
        if not g.m:
            return
        deg = degeneracy_order(g)[1]
        assert cover_cost(cover_degenerate(g, k)) <= (deg + 1) * opt_brute(g, k)


class TestSeparators:
    def test_centroid_examples(self):
        r = centroid_separator(gen_path(6))
        assert r.c == {2}
        assert max(len(r.a), len(r.b)) <= 3
        r = centroid_separator(gen_star(5))
        assert r.c == {0} and sorted((len(r.a), len(r.b))) == [2, 3]
        r = centroid_separator(Graph(1))
        assert (r.a, r.b, r.c) == (set(), set(), {0})

    def test_centroid_needs_tree(self):
        with pytest.raises(NotATreeError):
            centroid_separator(gen_cycle(4))

    def test_bfs_examples(self):
        r = bfs_level_separator(gen_path(5))
        assert (r.a, r.c, r.b) == ({0, 1}, {2}, {3, 4})
        assert bfs_level_separator(gen_star(4)).c == {0}
        r = bfs_level_separator(gen_clique(4))
        assert r.c == {0} and {frozenset(r.a), frozenset(r.b)} == {frozenset(), frozenset({1, 2, 3})}

    def test_bfs_needs_connected(self):
        with pytest.raises(DisconnectedGraphError):
            bfs_level_separator(Graph(3, [(0, 1)]))

    def test_metadata(self):
        assert CENTROID.alpha is not None and BFS_LEVEL.alpha is None

    @given(st.integers(1, 40), st.randoms(use_true_random=False))
    def test_centroid_results_separate(self, n, rng):
        t = random_tree(n, rng)
        r = centroid_separator(t)
        r.check(t)
        assert max(len(r.a), len(r.b)) <= CENTROID.alpha * n
        assert len(r.c) == 1

    @given(graphs(max_n=12))
    def test_bfs_results_separate(self, g):
        if g.m and is_connected(g):
            bfs_level_separator(g).check(g)


class TestSeparatorCover:
    def test_examples(self):
        c = cover_separator(gen_path(6), 2)
        assert c.sorted_subsets() == [[0, 1, 2], [2, 3, 4, 5]]
        g = Graph(5, [(0, 1), (1, 2)])
        assert cover_separator(g, 1).sorted_subsets() == [[0, 1, 2]]
        p7 = gen_path(7)
        c = cover_separator(p7, 4)
        assert valid(p7, c, 4) and cover_cost(c) <= 4

    def test_bfs_provider_on_cyclic_graphs(self):
        for g in (gen_cycle(9), gen_clique(5), gen_random_degenerate(20, 3, seed=4, connected=True)):
            for k in range(1, 7):
                assert valid(g, cover_separator(g, k, BFS_LEVEL), k)

    def test_random_trees(self):
        rng = random.Random(11)
        for _ in range(150):
            n = rng.randint(2, 50)
            t = random_tree(n, rng)
            for k in range(1, 9):
                c = cover_separator(t, k)
                assert valid(t, c, k)
                assert cover_cost(c) <= 3 * lb_connected(t, k)

    @given(graphs(max_n=12), st.integers(1, 6))
    def test_disconnected_inputs(self, g, k):
        assert valid(g, cover_separator(g, k, BFS_LEVEL), k)


class TestClique:
    def test_examples(self):
        assert cover_clique(4, 1).sorted_subsets() == [[0, 1, 2, 3]]
        c = cover_clique(6, 3)
        assert cover_cost(c) == 6
        # three 4-sets, each a pair of the groups {0,1}, {2,3}, {4,5}
        assert opt_brute(gen_clique(6), 3) == 4 == exact_opt(gen_clique(6), 3).cost
        c = cover_clique(9, 6)
        assert c.k == 6 and cover_cost(c) == 6

    def test_errors(self):
        with pytest.raises(ParameterError):
            cover_clique(0, 2)
        with pytest.raises(ParameterError):
            cover_clique(3, 0)

    def test_ratio_against_density_bound(self):
        for n, k in itertools.product(range(1, 61), range(1, 31)):
            c = cover_clique(n, k)
            assert valid(gen_clique(n), c, k)
            groups = 1
            while (groups + 1) * (groups + 2) // 2 <= k:
                groups += 1
            groups = min(groups, n)
            assert cover_cost(c) <= 2 * -(-n // groups)
            assert cover_cost(c) < 4 * max(lb_density(gen_clique(n), k), 1)
