"""Brute-force oracle: frozen values, structural invariants, assemblies."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromsym.graphs import (
    Graph,
    complete,
    conjoin,
    disjoint_union,
    kayak,
    lollipop,
    path,
    rooted_complete,
    rooted_cycle,
    rooted_path,
    tw_path,
)
from chromsym.oracle import (
    EdgeBudgetError,
    count_proper_colorings,
    csf_bruteforce,
    triple_deletion_check,
    x_tw_cycle_rec,
    x_tw_path_rec,
    x_via_cpg,
    x_via_kpg,
)
from chromsym.symfunc import e_term


def random_graph(rng: random.Random, max_n: int = 6) -> Graph:
    n = rng.randint(1, max_n)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < 0.45}
    return Graph(n, frozenset(edges))


class TestBruteForce:
    def test_single_vertex(self):
        assert csf_bruteforce(complete(1)) == e_term((1,))

    def test_complete_graphs(self):
        assert csf_bruteforce(complete(4)) == e_term((4,), 24)

    def test_path3(self):
        assert csf_bruteforce(path(3)) == e_term((3,), 3) + e_term((2, 1))

    def test_budget_error_names_limit(self):
        with pytest.raises(EdgeBudgetError, match="28 edges.*24"):
            csf_bruteforce(complete(8))
        # explicit override admits the same graph
        assert csf_bruteforce(complete(8), 28) == e_term((8,), math.factorial(8))

    def test_degree_matches_order(self):
        rng = random.Random(1)
        for _ in range(25):
            g = random_graph(rng)
            assert csf_bruteforce(g).degree == g.n_vertices

    def test_integrality(self):
        rng = random.Random(2)
        for _ in range(25):
            assert csf_bruteforce(random_graph(rng)).is_integral()

    def test_multiplicative_over_disjoint_union(self):
        rng = random.Random(3)
        for _ in range(20):
            g, h = random_graph(rng, 4), random_graph(rng, 4)
            assert (csf_bruteforce(disjoint_union(g, h))
                    == csf_bruteforce(g) * csf_bruteforce(h))

    def test_chromatic_polynomial_consistency(self):
        rng = random.Random(4)
        for _ in range(12):
            g = random_graph(rng, 5)
            x = csf_bruteforce(g)
            for m in range(1, 5):
                assert x.evaluate_at([1] * m) == count_proper_colorings(g, m)

    def test_both_routes_agree(self):
        # same sum computed by the vertex DP and the edge-subset recursion
        from chromsym.oracle import _edge_subsets, _vertex_dp

        rng = random.Random(5)
        for _ in range(30):
            n = rng.randint(2, 6)
            pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
            edges = sorted(e for e in pool if rng.random() < 0.6)
            assert _vertex_dp(n, edges) == _edge_subsets(n, edges)


class TestTripleDeletion:
    def test_empty_graph(self):
        assert triple_deletion_check(Graph(3, frozenset()), (0, 1, 2)) == (True, True)

    def test_path5_with_stable_triple(self):
        g = path(5)
        assert triple_deletion_check(g, (0, 2, 4)) == (True, True)

    def test_rejects_non_stable(self):
        with pytest.raises(ValueError):
            triple_deletion_check(path(3), (0, 1, 2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 7), st.randoms(use_true_random=False))
    def test_randomized(self, n, rng):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = {e for e in pairs if rng.random() < 0.4}
        t = tuple(sorted(rng.sample(range(n), 3)))
        forbidden = {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])}
        g = Graph(n, frozenset(edges - forbidden))
        assert triple_deletion_check(g, t) == (True, True)


class TestAssemblies:
    def test_kpg_edge_case(self):
        assert x_via_kpg(0, 2, rooted_complete(1)) == e_term((2,), 2)

    def test_kpg_matches_lollipop(self):
        assert x_via_kpg(2, 3, rooted_complete(1)) == csf_bruteforce(lollipop(3, 2))

    def test_cpg_matches_kayak(self):
        assert x_via_cpg(1, 3, rooted_cycle(3)) == csf_bruteforce(kayak(3, 3, 1))

    def test_kpg_general_h(self):
        h = rooted_path(3)
        for a in (2, 3):
            for l in (0, 1, 2):
                want = csf_bruteforce(conjoin(rooted_complete(a), h, l))
                assert x_via_kpg(l, a, h) == want

    def test_cpg_general_h(self):
        h = rooted_complete(3)
        for a in (3, 4):
            for l in (0, 1):
                want = csf_bruteforce(conjoin(rooted_cycle(a), h, l))
                assert x_via_cpg(l, a, h) == want


class TestTwinRecurrences:
    def test_tw_cycle_rec_frozen(self):
        assert x_tw_cycle_rec(3) == e_term((4,), 24)
        want = e_term((5,), 50) + e_term((4, 1), 6) + e_term((3, 2), 4)
        assert x_tw_cycle_rec(4) == want

    def test_tw_path_rec_vs_bruteforce(self):
        assert x_tw_path_rec(3, 2) == csf_bruteforce(tw_path(3, 2))
        assert x_tw_path_rec(5, 3) == csf_bruteforce(tw_path(5, 3))
