"""Induced path detection with certificates.

Search extends partial induced paths depth-first.  A candidate must be
adjacent to the current endpoint and outside a forbidden mask holding the
path vertices and every neighbour of the earlier path vertices.  Start
vertices and extensions are tried in ascending index order, so witnesses are
reproducible.  Worst case is exponential in the order.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ._backend import kernels
from .graph import DomainError, Graph

WitnessPath = tuple[int, ...]


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if len(set(seq)) != k or any(not 0 <= v < g.order for v in seq):
        return False
    for a in range(k):
        for b in range(a + 1, k):
            if g.has_edge(seq[a], seq[b]) != (b == a + 1):
                return False
    return True


def find_induced_path(g: Graph, k: int) -> Optional[WitnessPath]:
    if not 1 <= k <= g.order:
        raise DomainError(f"path order {k} outside 1..{g.order}")
    return kernels.find_induced_path(g.adj, k)


def longest_induced_path(g: Graph) -> tuple[int, WitnessPath]:
    if g.order < 1:
        raise DomainError("longest induced path needs at least one vertex")
    return kernels.longest_induced_path(g.adj)


def path_order(h: Graph) -> Optional[list[int]]:
    """Vertices of ``h`` in path order if ``h`` is a path graph, else None."""
    k = h.order
    if k == 0 or h.edge_count() != k - 1:
        return None
    if k == 1:
        return [0]
    degs = h.degrees()
    if max(degs) > 2:
        return None
    ends = [v for v in range(k) if degs[v] == 1]
    if len(ends) != 2:
        return None
    seq = [ends[0]]
    prev = -1
    while len(seq) < k:
        nxt = [w for w in h.neighbors(seq[-1]) if w != prev]
        if not nxt:
            return None
        prev = seq[-1]
        seq.append(nxt[0])
    return seq if is_induced_path(h, seq) else None
