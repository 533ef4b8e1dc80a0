"""The graphs G_n: a v-cycle, a w-side cycle complement, and v_i -- w_i spokes.

Vertex convention: vertex ``i - 1`` is ``v_i`` and vertex ``(n - 1) + i - 1``
is ``w_i`` for ``1 <= i <= n - 1``.  Index arithmetic is modulo ``n - 1`` with
representatives ``1..n-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .graph import DomainError, Graph, from_edges

MIN_N = 4
MAX_N = 32


class GnLabel(NamedTuple):
    side: str  # "V" or "W"
    index: int

    def __str__(self) -> str:
        return f"{self.side.lower()}{self.index}"


_LABEL_RE = re.compile(r"^\s*([vVwW])\s*(\d+)\s*$")


def parse_label(text: str) -> GnLabel:
    m = _LABEL_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse vertex label {text!r}; expected v<i> or w<i>")
    return GnLabel(m.group(1).upper(), int(m.group(2)))


def wrap(i: int, m: int) -> int:
    """Representative of ``i`` modulo ``m`` in ``1..m``."""
    return (i - 1) % m + 1


def adjacent_mod(i: int, j: int, m: int) -> bool:
    return (i - j) % m in (1, m - 1)


@dataclass(frozen=True)
class DihedralMap:
    """Index map ``i -> i + r`` or, if reflected, ``i -> r - i`` (mod n-1)."""

    rotation: int = 0
    reflected: bool = False

    def image(self, i: int, m: int) -> int:
        return wrap(self.rotation - i if self.reflected else i + self.rotation, m)

    def inverse(self, m: int) -> "DihedralMap":
        if self.reflected:
            return self
        return DihedralMap((-self.rotation) % m, False)

    def __str__(self) -> str:
        if self.reflected:
            return f"reflection i -> {self.rotation} - i"
        return f"rotation i -> i + {self.rotation}"


@dataclass(frozen=True)
class LabeledGn:
    n: int
    graph: Graph

    @property
    def m(self) -> int:
        """Cycle length ``n - 1``."""
        return self.n - 1

    def label_of(self, v: int) -> GnLabel:
        return label_of(self, v)

    def vertex_of(self, label: GnLabel | str) -> int:
        return vertex_of(self, label)

    def labels(self) -> list[GnLabel]:
        return [label_of(self, v) for v in range(self.graph.order)]


def build_gn(n: int) -> LabeledGn:
    if not MIN_N <= n <= MAX_N:
        raise DomainError(f"n must lie in {MIN_N}..{MAX_N}, got {n}")
    m = n - 1
    edges = []
    for i in range(1, m + 1):
        vi, wi = i - 1, m + i - 1
        edges.append((vi, wi))
        for j in range(i + 1, m + 1):
            vj, wj = j - 1, m + j - 1
            if adjacent_mod(i, j, m):
                edges.append((vi, vj))
            else:
                edges.append((wi, wj))
    return LabeledGn(n, from_edges(2 * m, edges))


def label_of(g: LabeledGn, v: int) -> GnLabel:
    m = g.m
    if not 0 <= v < 2 * m:
        raise DomainError(f"vertex {v} outside 0..{2 * m - 1}")
    return GnLabel("V", v + 1) if v < m else GnLabel("W", v - m + 1)


def vertex_of(g: LabeledGn, label: GnLabel | str) -> int:
    if isinstance(label, str):
        label = parse_label(label)
    side, i = label
    if side not in ("V", "W") or not 1 <= i <= g.m:
        raise DomainError(f"label {side}{i} outside v1..v{g.m}, w1..w{g.m}")
    return i - 1 if side == "V" else g.m + i - 1


def dihedral_maps(n: int) -> Iterator[DihedralMap]:
    for r in range(n - 1):
        yield DihedralMap(r, False)
    for r in range(n - 1):
        yield DihedralMap(r, True)


def apply_automorphism(g: LabeledGn, mp: DihedralMap) -> tuple[int, ...]:
    """Vertex permutation ``perm`` with ``perm[x]`` the image of vertex ``x``."""
    m = g.m
    if not 0 <= mp.rotation < m:
        raise DomainError(f"rotation {mp.rotation} outside 0..{m - 1}")
    perm = []
    for v in range(2 * m):
        side, i = label_of(g, v)
        perm.append(vertex_of(g, GnLabel(side, mp.image(i, m))))
    return tuple(perm)


def is_automorphism(g: Graph, perm: tuple[int, ...]) -> bool:
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.has_edge(u, v) != g.has_edge(perm[u], perm[v]):
                return False
    return True
