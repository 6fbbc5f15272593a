from itertools import combinations

import pytest

from clawchroma.cliques import (
    max_clique,
    max_clique_in_neighborhood,
    max_clique_through,
    omega,
)
from clawchroma.errors import VertexOutOfRangeError
from clawchroma.generators import SplitMix64, enumerate_labeled, random_graph
from clawchroma.graph import induced_subgraph
from graphzoo import complete, cycle, empty, naive_omega

from clawchroma import blown_up_odd_cycle, wheel


def _all_max_cliques_brute(g):
    w = naive_omega(g)
    return [
        sub
        for sub in combinations(range(g.n), w)
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
    ]


def test_omega_examples():
    assert omega(complete(5)) == 5
    assert omega(wheel(5)) == 3
    assert omega(blown_up_odd_cycle(2, 2)) == 3
    assert omega(blown_up_odd_cycle(2, 3)) == 4
    assert omega(empty(3)) == 1
    assert omega(empty(0)) == 0
    assert omega(cycle(5)) == 2


def test_omega_matches_naive_up_to_n6():
    for n in range(7):
        for g in enumerate_labeled(n):
            assert omega(g) == naive_omega(g)


def test_max_clique_is_lex_least():
    stream = SplitMix64(17)
    for _ in range(300):
        n = stream.next_below(9)
        g = random_graph(n, stream.next_unit(), stream)
        result = max_clique(g)
        brute = _all_max_cliques_brute(g)
        if g.n == 0:
            assert result.vertices == () and result.size == 0
            continue
        assert result.size == naive_omega(g)
        assert result.vertices == min(brute)


def test_max_clique_verifies_complete():
    g = wheel(5)
    result = max_clique(g)
    assert result.size == 3
    assert all(g.has_edge(u, v) for u, v in combinations(result.vertices, 2))


def test_monotone_under_induced_subgraphs():
    stream = SplitMix64(5)
    for _ in range(100):
        n = 1 + stream.next_below(9)
        g = random_graph(n, stream.next_unit(), stream)
        keep = [v for v in range(n) if stream.next_u64() & 1]
        sub, _ = induced_subgraph(g, keep)
        assert omega(sub) <= omega(g)


def test_neighborhood_clique_examples():
    assert max_clique_in_neighborhood(complete(5), 0).vertices == (1, 2, 3, 4)
    assert max_clique_in_neighborhood(wheel(5), 0).size == 2
    assert max_clique_in_neighborhood(cycle(4), 0).size == 1


def test_clique_through_examples():
    assert max_clique_through(complete(5), 0).size == 5
    assert max_clique_through(wheel(5), 0).size == 3
    for v in range(1, 6):
        assert max_clique_through(wheel(5), v).size == 3


def test_clique_through_contains_vertex_and_consistent():
    stream = SplitMix64(23)
    for _ in range(150):
        n = 1 + stream.next_below(8)
        g = random_graph(n, stream.next_unit(), stream)
        for u in range(g.n):
            through = max_clique_through(g, u)
            assert u in through.vertices
            assert through.size == 1 + max_clique_in_neighborhood(g, u).size
            if g.degree(u) >= 1:
                assert through.size >= 2


def test_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        max_clique_in_neighborhood(complete(3), 3)
    with pytest.raises(VertexOutOfRangeError):
        max_clique_through(complete(3), -1)
