import random

import pytest

from pnsat.construction import build_gn, vertex_of
from pnsat.graph import (
    DomainError,
    complete_graph,
    cycle_graph,
    new_graph,
    path_graph,
    petersen_graph,
    toggle_edge,
)
from pnsat.enumeration import labeled_graph
from pnsat.induced_path import (
    find_induced_path,
    is_induced_path,
    longest_induced_path,
    path_order,
)

from conftest import random_graph
import oracles


def test_is_induced_path_examples():
    c5 = cycle_graph(5)
    assert is_induced_path(c5, [0, 1, 2, 3])
    assert not is_induced_path(c5, [0, 1, 2, 3, 4])
    assert not is_induced_path(complete_graph(4), [0, 1, 2])
    assert not is_induced_path(c5, [0, 1, 1])
    assert not is_induced_path(c5, [0, 9])
    assert is_induced_path(c5, [])


def test_is_induced_path_on_deleted_cycle_edge():
    g = build_gn(7)
    v = lambda s: vertex_of(g, s)
    h = toggle_edge(g.graph, (v("v1"), v("v6")), False)
    seq = [v("w1")] + [v(f"v{i}") for i in range(1, 7)]
    assert is_induced_path(h, seq)
    assert not is_induced_path(g.graph, seq)


def test_find_examples():
    for n in range(6, 11):
        assert find_induced_path(build_gn(n).graph, n) is None
    pg = petersen_graph()
    assert find_induced_path(pg, 6) is None
    w = find_induced_path(pg, 5)
    assert w is not None and is_induced_path(pg, w)
    assert find_induced_path(path_graph(6), 6) == (0, 1, 2, 3, 4, 5)


def test_find_degenerate_orders():
    assert find_induced_path(new_graph(3), 1) == (0,)
    assert find_induced_path(new_graph(3), 2) is None
    assert find_induced_path(complete_graph(3), 2) == (0, 1)
    with pytest.raises(DomainError):
        find_induced_path(new_graph(3), 4)
    with pytest.raises(DomainError):
        find_induced_path(new_graph(3), 0)


def test_longest_examples():
    assert longest_induced_path(complete_graph(5))[0] == 2
    # brute force with networkx subgraph checks gives 5 for C6 and Petersen
    k, w = longest_induced_path(cycle_graph(6))
    assert k == 5 and is_induced_path(cycle_graph(6), w)
    assert longest_induced_path(petersen_graph())[0] == 5
    k5, w5 = longest_induced_path(build_gn(5).graph)
    assert k5 >= 5 and is_induced_path(build_gn(5).graph, w5)
    with pytest.raises(DomainError):
        longest_induced_path(new_graph(0))


def test_sound_monotone_deterministic():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 14), p=rng.random())
        for k in range(1, g.order + 1):
            w = find_induced_path(g, k)
            assert w == find_induced_path(g, k)
            if w is None:
                continue
            assert len(w) == k and is_induced_path(g, w)
            for j in range(1, k):
                assert find_induced_path(g, j) is not None
                assert is_induced_path(g, w[:j])
        k, w = longest_induced_path(g)
        assert is_induced_path(g, w) and len(w) == k
        if k < g.order:
            assert find_induced_path(g, k + 1) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_complete_against_all_sequences_oracle(n):
    table = oracles.all_sequence_path_table(n, n)
    for mask in range(1 << (n * (n - 1) // 2)):
        g = labeled_graph(n, mask)
        for k in range(1, n + 1):
            assert (find_induced_path(g, k) is not None) == bool(table[k][mask])


def test_path_order():
    assert path_order(path_graph(4)) == [0, 1, 2, 3]
    assert path_order(path_graph(1)) == [0]
    assert path_order(cycle_graph(4)) is None
    assert path_order(new_graph(0)) is None
    shuffled = path_graph(5).relabel([2, 0, 4, 1, 3])
    seq = path_order(shuffled)
    assert seq is not None and is_induced_path(shuffled, seq)
    # a triangle plus an isolated vertex has three edges on four vertices
    assert path_order(toggle_edge(complete_graph(4), (0, 3), False)) is None
