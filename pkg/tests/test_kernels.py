"""Both kernel backends against each other and against brute force."""

import random

import pytest

from pnsat import _kernels_py
from pnsat.graph import complete_graph, cycle_graph, path_graph, petersen_graph

from conftest import _kernels_c, random_graph
import oracles


def test_backend_tags(kern):
    assert kern.BACKEND in ("python", "cython")


def test_small_examples(kern):
    pg = petersen_graph()
    assert kern.find_induced_path(pg.adj, 6) is None
    assert kern.find_induced_path(pg.adj, 5) is not None
    assert kern.find_induced_path(path_graph(7).adj, 7) == tuple(range(7))
    assert kern.find_induced_path(complete_graph(4).adj, 3) is None
    assert kern.find_induced_path(complete_graph(4).adj, 5) is None
    assert kern.find_induced_path([], 1) is None
    assert kern.longest_induced_path([]) == (0, ())
    assert kern.longest_induced_path(cycle_graph(6).adj)[0] == 5


def test_adjacency_from_mask(kern):
    # pairs in order (0,1), (0,2), (1,2): bits 0 and 2 make the path 0-1-2
    assert kern.adjacency_from_mask(3, 0b101) == [0b010, 0b101, 0b010]
    assert kern.adjacency_from_mask(0, 0) == []
    with pytest.raises(ValueError):
        kern.adjacency_from_mask(12, 0)


def test_saturation_vs_definition_order5(kern):
    n = 5
    for k in (2, 3, 4):
        h = path_graph(k)
        for mask in range(1 << 10):
            expected = oracles.definition_is_saturated(n, h, mask)
            assert kern.is_path_saturated(kern.adjacency_from_mask(n, mask), k) == expected


def test_exhaust_chunks_cover_range(kern):
    whole = kern.exhaust_path_target(5, 3, 0, 1 << 10)
    parts = kern.exhaust_path_target(5, 3, 0, 300) + kern.exhaust_path_target(5, 3, 300, 1 << 10)
    assert whole == parts


@pytest.mark.skipif(_kernels_c is None, reason="extension not built")
def test_backends_agree_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(300):
        order = rng.randint(1, 20)
        g = random_graph(rng, order, p=rng.random())
        for k in range(1, order + 1):
            assert _kernels_c.find_induced_path(g.adj, k) == _kernels_py.find_induced_path(g.adj, k)
        assert _kernels_c.longest_induced_path(g.adj) == _kernels_py.longest_induced_path(g.adj)
        k = rng.randint(2, 5)
        assert _kernels_c.is_path_saturated(g.adj, k) == _kernels_py.is_path_saturated(g.adj, k)


@pytest.mark.skipif(_kernels_c is None, reason="extension not built")
def test_backends_agree_at_64_vertices():
    rng = random.Random(7)
    g = random_graph(rng, 64, p=0.06)
    assert _kernels_c.find_induced_path(g.adj, 10) == _kernels_py.find_induced_path(g.adj, 10)


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, PNSAT_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "import pnsat; print(pnsat.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert proc.stdout.strip() == "python"
