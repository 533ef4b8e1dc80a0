"""Undirected simple graphs on at most 64 vertices, stored as bit rows.

Row ``i`` of ``Graph.adj`` is an int whose bit ``j`` is set iff ``{i, j}`` is
an edge.  Graphs are immutable; every mutation returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_ORDER = 64


class CapacityError(ValueError):
    """Raised when a graph would exceed the supported vertex count."""


class DomainError(ValueError):
    """An argument lies outside the operation's documented domain."""


class InvalidEdgeError(ValueError):
    pass


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise InvalidEdgeError(f"loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise CapacityError(f"order {self.order} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.order:
            raise ValueError("adjacency row count does not match order")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or (row >> i) & 1:
                raise ValueError(f"row {i} has a loop or out-of-range bit")
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency at {{{i}, {j}}}")
                r &= r - 1

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(row).count("1") for row in self.adj]

    def edge_count(self) -> int:
        return sum(bin(row).count("1") for row in self.adj) // 2

    def edges(self) -> Iterator[Edge]:
        """Edges in ascending (u, v) order with u < v."""
        for u, row in enumerate(self.adj):
            r = row >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield Edge(u, v)
                r >>= 1
                v += 1

    def non_edges(self) -> Iterator[Edge]:
        for u in range(self.order):
            row = self.adj[u]
            for v in range(u + 1, self.order):
                if not (row >> v) & 1:
                    yield Edge(u, v)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.order
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph(self.order, tuple(rows))


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def new_graph(order: int) -> Graph:
    if order > MAX_ORDER or order < 0:
        raise CapacityError(f"order {order} outside 0..{MAX_ORDER}")
    return Graph(order, (0,) * order)


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if order > MAX_ORDER or order < 0:
        raise CapacityError(f"order {order} outside 0..{MAX_ORDER}")
    rows = [0] * order
    for u, v in edges:
        _check_edge(order, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def _check_edge(order: int, u: int, v: int) -> None:
    if u == v:
        raise InvalidEdgeError(f"loop at vertex {u}")
    if not (0 <= u < order and 0 <= v < order):
        raise InvalidEdgeError(f"edge {{{u}, {v}}} outside vertex range 0..{order - 1}")


def toggle_edge(g: Graph, e: tuple[int, int], present: bool) -> Graph:
    u, v = e
    _check_edge(g.order, u, v)
    rows = list(g.adj)
    if present:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    else:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.order, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def path_graph(k: int) -> Graph:
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return complement(new_graph(k))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return from_edges(
        a.order + b.order,
        list(a.edges()) + [(u + a.order, v + a.order) for u, v in b.edges()],
    )


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


# --- graph6 -----------------------------------------------------------------

def _pair_bits(order: int) -> Iterator[tuple[int, int]]:
    # graph6 body order: column-major upper triangle
    for j in range(1, order):
        for i in range(j):
            yield i, j


def emit_graph6(g: Graph) -> str:
    n = g.order
    if n < 63:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = [1 if (g.adj[i] >> j) & 1 else 0 for i, j in _pair_bits(n)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = len(text) - len(text.lstrip())
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base += 10
    if not s:
        raise Graph6Error("empty graph6 record", base)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + off)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) >= 2 and s[1] == "~":
            raise CapacityError("graph6 8-byte order form exceeds 64 vertices")
        if len(s) < 4:
            raise Graph6Error("truncated order field", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
        if n < 63:
            raise Graph6Error("non-canonical long order field", base + 1)
    if n > MAX_ORDER:
        raise CapacityError(f"graph6 order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} body bytes for order {n}, found {len(body)}",
            base + pos + min(len(body), need),
        )
    rows = [0] * n
    k = 0
    pairs = _pair_bits(n)
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", base + pos + k // 6)
                continue
            i, j = next(pairs)
            if (val >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (record index, record text), skipping blank lines and headers."""
    idx = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[10:]
            if not line:
                continue
        yield idx, line
        idx += 1


# --- isomorphism ------------------------------------------------------------

ISO_MAX_ORDER = 16


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Backtracking isomorphism test with degree and neighbourhood refinement."""
    if max(a.order, b.order) > ISO_MAX_ORDER:
        raise CapacityError(f"isomorphism test supports order <= {ISO_MAX_ORDER}")
    if a.order != b.order or a.edge_count() != b.edge_count():
        return False
    da, db = a.degrees(), b.degrees()
    if sorted(da) != sorted(db):
        return False
    # vertex invariant: own degree plus sorted neighbour degrees
    inv_a = [(da[v], tuple(sorted(da[w] for w in a.neighbors(v)))) for v in range(a.order)]
    inv_b = [(db[v], tuple(sorted(db[w] for w in b.neighbors(v)))) for v in range(b.order)]
    if sorted(inv_a) != sorted(inv_b):
        return False

    # map a's vertices in BFS-ish order so adjacency constraints bite early
    order: list[int] = []
    seen = 0
    for root in sorted(range(a.order), key=lambda v: -da[v]):
        if (seen >> root) & 1:
            continue
        queue = [root]
        seen |= 1 << root
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(a.neighbors(v), key=lambda x: -da[x]):
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    queue.append(w)

    mapping = [-1] * a.order
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == len(order):
            return True
        v = order[depth]
        for w in range(b.order):
            if (used >> w) & 1 or inv_b[w] != inv_a[v]:
                continue
            ok = True
            for x in order[:depth]:
                if ((a.adj[v] >> x) & 1) != ((b.adj[w] >> mapping[x]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return extend(0)
