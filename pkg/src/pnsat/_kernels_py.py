"""Pure-Python search kernels.

Mirrors ``_kernels.pyx`` function for function; ``pnsat._backend`` picks one
at import.  Adjacency is passed as a sequence of int bit rows.
"""

from __future__ import annotations

from typing import Optional, Sequence

BACKEND = "python"


def _extend(adj: Sequence[int], k: int, path: list[int], depth: int, blocked: int) -> bool:
    last = path[depth - 1]
    cand = adj[last] & ~blocked
    if depth == k - 1:
        if cand:
            path[depth] = (cand & -cand).bit_length() - 1
            return True
        return False
    # neighbours of `last` become forbidden once the path moves past it
    nxt = blocked | adj[last] | (1 << last)
    while cand:
        low = cand & -cand
        cand ^= low
        path[depth] = low.bit_length() - 1
        if _extend(adj, k, path, depth + 1, nxt):
            return True
    return False


def find_induced_path(adj: Sequence[int], k: int) -> Optional[tuple[int, ...]]:
    n = len(adj)
    if k < 1 or k > n:
        return None
    path = [0] * k
    for s in range(n):
        path[0] = s
        if k == 1 or _extend(adj, k, path, 1, 1 << s):
            return tuple(path)
    return None


def longest_induced_path(adj: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    n = len(adj)
    if n == 0:
        return 0, ()
    full = (1 << n) - 1
    best = [1, (0,)]
    path = [0] * n

    def walk(depth: int, blocked: int) -> bool:
        # returns True once a Hamiltonian induced path is found (cannot improve)
        if depth > best[0]:
            best[0] = depth
            best[1] = tuple(path[:depth])
            if depth == n:
                return True
        last = path[depth - 1]
        cand = adj[last] & ~blocked
        if not cand:
            return False
        nxt = blocked | adj[last] | (1 << last)
        if depth + 1 + bin(full & ~nxt).count("1") <= best[0]:
            return False
        while cand:
            low = cand & -cand
            cand ^= low
            path[depth] = low.bit_length() - 1
            if walk(depth + 1, nxt):
                return True
        return False

    for s in range(n):
        path[0] = s
        if walk(1, 1 << s):
            break
    return best[0], best[1]


def is_path_saturated(adj: Sequence[int], k: int) -> bool:
    """Early-exit check: P_k-free, every addition and every deletion creates one."""
    if find_induced_path(adj, k) is not None:
        return False
    n = len(adj)
    rows = list(adj)
    for u in range(n):
        for v in range(u + 1, n):
            if not (rows[u] >> v) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                hit = find_induced_path(rows, k)
                rows[u] ^= 1 << v
                rows[v] ^= 1 << u
                if hit is None:
                    return False
    for u in range(n):
        for v in range(u + 1, n):
            if (rows[u] >> v) & 1:
                rows[u] ^= 1 << v
                rows[v] ^= 1 << u
                hit = find_induced_path(rows, k)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                if hit is None:
                    return False
    return True


def adjacency_from_mask(order: int, mask: int) -> list[int]:
    """Bit ``b`` of ``mask`` is the b-th pair in graph6 (column-major) order."""
    if order > 11:
        raise ValueError("edge masks are limited to order 11")
    rows = [0] * order
    b = 0
    for j in range(1, order):
        for i in range(j):
            if (mask >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    return rows


def exhaust_path_target(order: int, k: int, lo: int, hi: int) -> list[int]:
    """Edge masks in ``[lo, hi)`` whose graph is P_k-induced-saturated."""
    hits = []
    for mask in range(lo, hi):
        if is_path_saturated(adjacency_from_mask(order, mask), k):
            hits.append(mask)
    return hits
