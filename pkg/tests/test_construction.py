from itertools import combinations

import pytest

from pnsat.construction import (
    DihedralMap,
    GnLabel,
    apply_automorphism,
    build_gn,
    dihedral_maps,
    is_automorphism,
    label_of,
    parse_label,
    vertex_of,
)
from pnsat.graph import DomainError, is_isomorphic, petersen_graph


def edge_rule(n, a, b):
    """Adjacency of two labels read straight off the three edge rules."""
    m = n - 1
    (sa, i), (sb, j) = a, b
    if sa != sb:
        return i == j
    close = (i - j) % m in (1, m - 1)
    return close if sa == "V" else (i != j and not close)


@pytest.mark.parametrize("n", range(4, 13))
def test_edge_rules_exhaustive(n):
    g = build_gn(n)
    labels = [("V", i) for i in range(1, n)] + [("W", i) for i in range(1, n)]
    for a, b in combinations(labels, 2):
        assert g.graph.has_edge(vertex_of(g, GnLabel(*a)), vertex_of(g, GnLabel(*b))) == edge_rule(n, a, b)


@pytest.mark.parametrize("n", range(4, 13))
def test_degrees_and_edge_count(n):
    g = build_gn(n)
    m = n - 1
    degs = g.graph.degrees()
    assert degs[:m] == [3] * m
    assert degs[m:] == [n - 3] * m
    assert g.graph.edge_count() == n * (n - 1) // 2


def test_small_builds():
    g6, g7 = build_gn(6), build_gn(7)
    assert (g6.graph.order, g6.graph.edge_count()) == (10, 15)
    assert (g7.graph.order, g7.graph.edge_count()) == (12, 21)
    assert is_isomorphic(g6.graph, petersen_graph())
    assert build_gn(32).graph.order == 62
    for bad in (3, 33, 0):
        with pytest.raises(DomainError):
            build_gn(bad)


def test_labels_roundtrip():
    g = build_gn(7)
    assert vertex_of(g, GnLabel("V", 1)) == 0
    assert label_of(g, 6) == GnLabel("W", 1)
    assert vertex_of(g, "w6") == 11
    for v in range(g.graph.order):
        assert vertex_of(g, label_of(g, v)) == v
    for bad in (-1, 12):
        with pytest.raises(DomainError):
            label_of(g, bad)
    for bad in (GnLabel("V", 0), GnLabel("W", 7), GnLabel("X", 1)):
        with pytest.raises(DomainError):
            vertex_of(g, bad)
    with pytest.raises(DomainError):
        parse_label("u3")
    assert str(GnLabel("W", 4)) == "w4"


def test_dihedral_examples():
    g7 = build_gn(7)
    assert apply_automorphism(g7, DihedralMap(0)) == tuple(range(12))
    rot = apply_automorphism(g7, DihedralMap(1))
    assert rot[vertex_of(g7, "v6")] == vertex_of(g7, "v1")
    assert is_automorphism(g7.graph, rot)
    g8 = build_gn(8)
    # i -> 2 - i
    refl = apply_automorphism(g8, DihedralMap(2, True))
    assert refl[vertex_of(g8, "v1")] == vertex_of(g8, "v1")
    assert refl[vertex_of(g8, "w3")] == vertex_of(g8, "w6")
    assert is_automorphism(g8.graph, refl)
    with pytest.raises(DomainError):
        apply_automorphism(g8, DihedralMap(7))


@pytest.mark.parametrize("n", range(6, 13))
def test_every_dihedral_map_is_automorphism(n):
    g = build_gn(n)
    maps = list(dihedral_maps(n))
    assert len(maps) == 2 * (n - 1)
    for mp in maps:
        perm = apply_automorphism(g, mp)
        assert sorted(perm) == list(range(g.graph.order))
        assert is_automorphism(g.graph, perm)
        inv = apply_automorphism(g, mp.inverse(n - 1))
        assert all(inv[perm[x]] == x for x in range(g.graph.order))


@pytest.mark.parametrize("n", range(7, 13))
def test_five_w_vertices_contain_triangle(n):
    g = build_gn(n)
    ws = [vertex_of(g, GnLabel("W", i)) for i in range(1, n)]
    for five in combinations(ws, 5):
        assert any(
            g.graph.has_edge(a, b) and g.graph.has_edge(b, c) and g.graph.has_edge(a, c)
            for a, b, c in combinations(five, 3)
        )


def test_triangle_lemma_fails_at_six():
    # with n - 1 = 5 the w-side is a 5-cycle, which has no triangle
    g = build_gn(6)
    ws = [vertex_of(g, GnLabel("W", i)) for i in range(1, 6)]
    assert not any(
        g.graph.has_edge(a, b) and g.graph.has_edge(b, c) and g.graph.has_edge(a, c)
        for a, b, c in combinations(ws, 3)
    )
