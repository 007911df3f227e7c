import itertools

import pytest
from hypothesis import given, strategies as st

from indcover.generators import gen_caterpillar, gen_clique, gen_cycle, gen_path, gen_star
from indcover.graph import (
    Graph,
    GraphError,
    InvalidVertexError,
    UndefinedInputError,
    caterpillar_spine,
    closed_neighborhood,
    degeneracy_order,
    induced_subgraph,
    maximal_matching_vertex_cover,
    neighborhood,
    vertex_connectivity,
)
from oracles import all_pairs, connectivity_brute, degeneracy_brute, graphs, is_caterpillar_brute


def all_graphs(n):
    pairs = all_pairs(n)
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def prufer_tree(n, seq):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def prufer_trees(n):
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_tree(n, seq)


class TestGraph:
    def test_dedup_and_symmetry(self):
        g = Graph(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.adj[1] == {0, 2}

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidVertexError):
            Graph(2, [(0, 2)])

    def test_max_degree(self):
        assert gen_star(4).max_degree == 4
        assert Graph(3).max_degree == 0


class TestInducedSubgraph:
    def test_path_prefix(self):
        h = induced_subgraph(gen_path(4), {0, 1, 2})
        assert (h.n, h.m) == (3, 2)

    def test_clique_pair(self):
        h = induced_subgraph(gen_clique(4), {0, 2})
        assert h.edges == ((0, 1),)
        assert h.labels == (0, 2)

    def test_star_leaves(self):
        h = induced_subgraph(gen_star(3), {1, 2, 3})
        assert (h.n, h.m) == (3, 0)

    def test_labels_compose(self):
        g = gen_path(6)
        h = induced_subgraph(induced_subgraph(g, {2, 3, 4, 5}), {1, 3})
        assert h.labels == (3, 5)

    def test_invalid_vertex(self):
        with pytest.raises(InvalidVertexError):
            induced_subgraph(gen_path(3), {5})

    @given(graphs(max_n=10), st.data())
    def test_edges_are_filtered_edges(self, g, data):
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        h = induced_subgraph(g, s)
        order = sorted(s)
        got = {(order[u], order[v]) for u, v in h.edges}
        assert got == {e for e in g.edges if set(e) <= s}


class TestNeighborhoods:
    def test_star_leaves(self):
        assert neighborhood(gen_star(3), {1, 2, 3}) == {0}

    def test_path_middle(self):
        assert neighborhood(gen_path(5), {2}) == {1, 3}

    def test_everything(self):
        g = gen_cycle(5)
        assert neighborhood(g, range(5)) == frozenset()

    def test_closed(self):
        assert closed_neighborhood(gen_star(3), 0) == {0, 1, 2, 3}
        assert closed_neighborhood(Graph(3, [(0, 1)]), 2) == {2}
        assert closed_neighborhood(gen_path(3), 1) == {0, 1, 2}

    def test_invalid(self):
        with pytest.raises(InvalidVertexError):
            closed_neighborhood(gen_path(3), 3)
        with pytest.raises(InvalidVertexError):
            neighborhood(gen_path(3), {-1})


class TestConnectivity:
    def test_examples(self):
        assert vertex_connectivity(gen_clique(4)) == 3
        assert vertex_connectivity(gen_path(3)) == 1
        # brute-force value for the 4-cycle, frozen
        assert connectivity_brute(gen_cycle(4)) == 2
        assert vertex_connectivity(gen_cycle(4)) == 2

    def test_conventions(self):
        assert vertex_connectivity(Graph(1)) == 0
        assert vertex_connectivity(Graph(4, [(0, 1), (2, 3)])) == 0
        with pytest.raises(UndefinedInputError):
            vertex_connectivity(Graph(0))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_brute_force_exhaustively(self, n):
        for g in all_graphs(n):
            assert vertex_connectivity(g) == connectivity_brute(g), g.edges

    @given(graphs(min_n=6, max_n=7))
    def test_matches_brute_force_n7(self, g):
        assert vertex_connectivity(g) == connectivity_brute(g)


class TestDegeneracy:
    def test_examples(self):
        assert degeneracy_order(gen_path(5))[1] == 1
        assert degeneracy_order(gen_star(4))[1] == 1
        assert degeneracy_order(gen_clique(4))[1] == 3
        assert degeneracy_brute(gen_cycle(5)) == 2
        assert degeneracy_order(gen_cycle(5))[1] == 2

    def test_tie_breaking(self):
        assert degeneracy_order(gen_cycle(4))[0] == [0, 1, 2, 3]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive(self, n):
        for g in all_graphs(n):
            order, c = degeneracy_order(g)
            assert sorted(order) == list(range(n))
            assert c == degeneracy_brute(g)

    @given(graphs(min_n=1, max_n=7))
    def test_forward_degree(self, g):
        order, c = degeneracy_order(g)
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            assert sum(1 for w in g.adj[v] if pos[w] > pos[v]) <= c
        assert c == degeneracy_brute(g)


class TestMatchingCover:
    def test_path(self):
        assert maximal_matching_vertex_cover(gen_path(4)) == {0, 1, 2, 3}

    def test_edge_and_empty(self):
        assert maximal_matching_vertex_cover(Graph(2, [(0, 1)])) == {0, 1}
        assert maximal_matching_vertex_cover(Graph(3)) == frozenset()

    @given(graphs(max_n=10))
    def test_is_vertex_cover(self, g):
        c = maximal_matching_vertex_cover(g)
        assert all(u in c or v in c for u, v in g.edges)


class TestCaterpillarSpine:
    def test_examples(self):
        assert caterpillar_spine(gen_path(5)) == (1, 2, 3)
        assert caterpillar_spine(gen_star(3)) == (0,)
        assert caterpillar_spine(gen_cycle(4)) is None

    def test_degenerate(self):
        assert caterpillar_spine(Graph(1)) == (0,)
        assert caterpillar_spine(Graph(2, [(0, 1)])) == ()
        assert caterpillar_spine(Graph(2)) is None

    def test_not_caterpillar(self):
        spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert caterpillar_spine(spider) is None

    def test_generated(self):
        g = gen_caterpillar(3, (2, 1, 0))
        assert (g.n, g.m) == (6, 5)
        assert caterpillar_spine(g) == (0, 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_all_labeled_trees(self, n):
        for t in prufer_trees(n):
            spine = caterpillar_spine(t)
            assert (spine is not None) == is_caterpillar_brute(t)
            if spine and len(spine) > 1:
                assert all(t.has_edge(a, b) for a, b in zip(spine, spine[1:]))

    @given(st.integers(8, 9).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))))
    def test_random_trees_n9(self, drawn):
        n, seq = drawn
        t = prufer_tree(n, seq)
        assert (caterpillar_spine(t) is not None) == is_caterpillar_brute(t)

    @given(graphs(max_n=9))
    def test_random_graphs(self, g):
        assert (caterpillar_spine(g) is not None) == is_caterpillar_brute(g)
