"""Induced-saturation verification and the explicit G_n witness formulas."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from ._backend import kernels
from .construction import DihedralMap, GnLabel, LabeledGn, adjacent_mod, label_of, vertex_of, wrap
from .graph import CapacityError, DomainError, Edge, Graph, path_graph, toggle_edge
from .induced_path import is_induced_path, path_order

GENERAL_H_MAX_ORDER = 32

Witness = tuple[int, ...]


class WitnessConsistencyError(RuntimeError):
    """A witness formula produced a set that is not an induced path."""


# --- general induced containment ----------------------------------------------

def find_induced_subgraph(g: Graph, h: Graph) -> Optional[Witness]:
    """Embedding ``f`` (``f[x]`` is the image of h-vertex ``x``) of ``h`` as an
    induced subgraph of ``g``, or None."""
    k = h.order
    if k > g.order:
        return None
    if k == 0:
        return ()
    dg, dh = g.degrees(), h.degrees()
    # place h-vertices with many already-placed neighbours first
    order: list[int] = []
    rest = set(range(k))
    while rest:
        best = max(rest, key=lambda x: (sum((h.adj[x] >> y) & 1 for y in order), dh[x], -x))
        order.append(best)
        rest.remove(best)
    image = [-1] * k
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == k:
            return True
        x = order[depth]
        for y in range(g.order):
            if (used >> y) & 1 or dg[y] < dh[x]:
                continue
            ok = True
            for p in order[:depth]:
                if ((h.adj[x] >> p) & 1) != ((g.adj[y] >> image[p]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[x] = y
            used |= 1 << y
            if extend(depth + 1):
                return True
            used &= ~(1 << y)
        image[x] = -1
        return False

    return tuple(image) if extend(0) else None


def is_induced_embedding(g: Graph, h: Graph, emb: Sequence[int]) -> bool:
    if len(emb) != h.order or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= y < g.order for y in emb):
        return False
    for a in range(h.order):
        for b in range(a + 1, h.order):
            if h.has_edge(a, b) != g.has_edge(emb[a], emb[b]):
                return False
    return True


# --- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeOutcome:
    edge: Edge
    witness: Optional[Witness]

    @property
    def ok(self) -> bool:
        return self.witness is not None


@dataclass
class VerificationReport:
    target_order: int
    free_ok: bool
    free_witness: Optional[Witness]
    deletion_results: list[EdgeOutcome] = field(default_factory=list)
    addition_results: list[EdgeOutcome] = field(default_factory=list)
    witness_kind: str = "path"
    labels: Optional[list[str]] = None

    @property
    def verdict(self) -> bool:
        return (
            self.free_ok
            and all(o.ok for o in self.deletion_results)
            and all(o.ok for o in self.addition_results)
        )

    def _name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def _seq(self, w: Optional[Witness]) -> Optional[list[str]]:
        return None if w is None else [self._name(v) for v in w]

    def to_dict(self) -> dict:
        def outcome(o: EdgeOutcome) -> dict:
            return {
                "edge": [self._name(o.edge.u), self._name(o.edge.v)],
                "ok": o.ok,
                "witness": self._seq(o.witness),
            }

        return {
            "target_order": self.target_order,
            "witness_kind": self.witness_kind,
            "free_ok": self.free_ok,
            "free_counterexample": self._seq(self.free_witness),
            "deletions": [outcome(o) for o in self.deletion_results],
            "additions": [outcome(o) for o in self.addition_results],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"target_order {self.target_order}", f"witness_kind {self.witness_kind}"]
        if self.free_ok:
            lines.append("free ok")
        else:
            lines.append("free FAIL contains " + " ".join(self._seq(self.free_witness)))
        for tag, results in (("delete", self.deletion_results), ("add", self.addition_results)):
            for o in results:
                e = f"{self._name(o.edge.u)}-{self._name(o.edge.v)}"
                if o.ok:
                    lines.append(f"{tag} {e} ok " + " ".join(self._seq(o.witness)))
                else:
                    lines.append(f"{tag} {e} FAIL")
        n_del = sum(o.ok for o in self.deletion_results)
        n_add = sum(o.ok for o in self.addition_results)
        lines.append(f"deletions {n_del}/{len(self.deletion_results)}")
        lines.append(f"additions {n_add}/{len(self.addition_results)}")
        lines.append(f"verdict {'true' if self.verdict else 'false'}")
        return "\n".join(lines)


def _searcher(h: Graph) -> tuple[Callable[[Graph], Optional[Witness]], str]:
    seq = path_order(h)
    if seq is not None:
        k = h.order

        def find_path(g: Graph) -> Optional[Witness]:
            return kernels.find_induced_path(g.adj, k) if k <= g.order else None

        return find_path, "path"
    return (lambda g: find_induced_subgraph(g, h)), "embedding"


def verify_h_is(g: Graph, h: Graph, workers: int = 1, labels: Optional[list[str]] = None) -> VerificationReport:
    """Check all three clauses of h-induced-saturation exhaustively.

    When ``h`` is a path graph the witnesses are ordered induced paths;
    otherwise they are embeddings indexed by the vertices of ``h``.
    """
    if path_order(h) is None and g.order > GENERAL_H_MAX_ORDER:
        raise CapacityError(f"general targets support host order <= {GENERAL_H_MAX_ORDER}")
    find, kind = _searcher(h)
    free_witness = find(g)

    def deleted(e: Edge) -> EdgeOutcome:
        return EdgeOutcome(e, find(toggle_edge(g, e, False)))

    def added(e: Edge) -> EdgeOutcome:
        return EdgeOutcome(e, find(toggle_edge(g, e, True)))

    edges, non_edges = list(g.edges()), list(g.non_edges())
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            dels = list(pool.map(deleted, edges))
            adds = list(pool.map(added, non_edges))
    else:
        dels = [deleted(e) for e in edges]
        adds = [added(e) for e in non_edges]
    return VerificationReport(
        target_order=h.order,
        free_ok=free_witness is None,
        free_witness=free_witness,
        deletion_results=dels,
        addition_results=adds,
        witness_kind=kind,
        labels=labels,
    )


def verify_pn_is(g: LabeledGn, workers: int = 1) -> VerificationReport:
    labels = [str(l) for l in g.labels()]
    return verify_h_is(g.graph, path_graph(g.n), workers=workers, labels=labels)


# --- case analysis for G_n -------------------------------------------------------

DELETE = "delete"
ADD = "add"


@dataclass(frozen=True)
class EdgeCase:
    mode: str
    edge: Edge
    edge_type: str  # "VV", "VW" or "WW"
    case: str  # S1, S2, S3, S3', S3'', T1, T2, T2', T3, T3', T3''
    canonical_j: Optional[int]
    map: DihedralMap  # carries the canonical edge onto ``edge``
    to_canonical: DihedralMap  # carries ``edge`` onto the canonical edge

    def canonical_labels(self, n: int) -> tuple[GnLabel, GnLabel]:
        return canonical_edge_labels(self.case, n, self.canonical_j)


def canonical_edge_labels(case: str, n: int, j: Optional[int]) -> tuple[GnLabel, GnLabel]:
    m = n - 1
    if case == "S1":
        return GnLabel("V", 1), GnLabel("V", m)
    if case == "S2":
        return GnLabel("V", 1), GnLabel("W", 1)
    if case.startswith("S3"):
        return GnLabel("W", 1), GnLabel("W", j)
    if case == "T1":
        return GnLabel("W", 1), GnLabel("W", m)
    if case.startswith("T2"):
        return GnLabel("V", 1), GnLabel("V", j)
    if case.startswith("T3"):
        return GnLabel("V", 1), GnLabel("W", j)
    raise ValueError(f"unknown case {case!r}")


def _rotation_to_one(i: int, m: int) -> DihedralMap:
    return DihedralMap((1 - i) % m, False)


def classify_edge(g: LabeledGn, e: tuple[int, int], mode: str) -> EdgeCase:
    if mode not in (DELETE, ADD):
        raise DomainError(f"mode must be {DELETE!r} or {ADD!r}")
    a, b = e
    if a == b:
        raise DomainError(f"loop at vertex {a} is not an edge")
    edge = Edge.of(a, b)
    la, lb = label_of(g, edge.u), label_of(g, edge.v)
    present = g.graph.has_edge(edge.u, edge.v)
    if mode == DELETE and not present:
        raise DomainError(f"cannot delete {la}{lb}: not an edge of G_{g.n}")
    if mode == ADD and present:
        raise DomainError(f"cannot add {la}{lb}: edge already present in G_{g.n}")
    m = g.m
    j: Optional[int] = None
    if la.side == lb.side:
        edge_type = la.side * 2
        i1, i2 = la.index, lb.index
        if adjacent_mod(i1, i2, m):
            # cycle-adjacent pair goes to {1, m}: the endpoint preceding the
            # other one in cyclic order is sent to m
            lo = i1 if wrap(i1 + 1, m) == i2 else i2
            rot = DihedralMap((m - lo) % m, False)
            case = "S1" if mode == DELETE else "T1"
        else:
            rot = _rotation_to_one(min(i1, i2), m)
            j = rot.image(max(i1, i2), m)
            if mode == DELETE:
                case = "S3'" if j == 3 else "S3''" if j == m - 1 else "S3"
            else:
                case = "T2'" if j == 3 else "T2"
    else:
        edge_type = "VW"
        lv, lw = (la, lb) if la.side == "V" else (lb, la)
        rot = _rotation_to_one(lv.index, m)
        if mode == DELETE:
            case = "S2"
        else:
            j = rot.image(lw.index, m)
            case = "T3''" if j == m else "T3'" if j == m - 1 else "T3"
    return EdgeCase(mode, edge, edge_type, case, j, rot.inverse(m), rot)


def _vs(lo: int, hi: int) -> list[GnLabel]:
    return [GnLabel("V", i) for i in range(lo, hi + 1)]


def _ws(*idx: int) -> list[GnLabel]:
    return [GnLabel("W", i) for i in idx]


def canonical_witness_set(case: str, n: int, j: Optional[int] = None) -> list[GnLabel]:
    """Witness vertex set for the canonical edge of ``case`` in G_n."""
    if case == "S1":
        return _ws(1) + _vs(1, n - 1)
    if case == "S2":
        return _ws(1, n - 2) + _vs(1, n - 2)
    if case == "S3":
        return _ws(1, j - 1, j, n - 1) + _vs(1, j - 2) + _vs(j, n - 3)
    if case == "S3'":
        return _ws(1, 3) + _vs(1, 1) + _vs(3, n - 1)
    if case == "S3''":
        return _ws(1, n - 2) + _vs(1, n - 2)
    if case == "T1":
        return _ws(1, n - 1) + _vs(1, n - 2)
    if case == "T2":
        return _ws(j - 2, j - 1, n - 1) + _vs(1, j - 2) + _vs(j, n - 2)
    if case == "T2'":
        return _ws(2, n - 2, n - 1) + _vs(1, 1) + _vs(3, n - 2)
    if case == "T3":
        return _ws(j - 1, j, j + 1) + _vs(1, j - 1) + _vs(j + 1, n - 2)
    if case == "T3'":
        return _ws(n - 3, n - 2, n - 1) + _vs(1, n - 3)
    if case == "T3''":
        return _ws(n - 2, n - 1) + _vs(1, n - 2)
    raise ValueError(f"unknown case {case!r}")


def order_as_path(g: Graph, vertices: Sequence[int]) -> Optional[Witness]:
    """Order ``vertices`` along the induced path they span, or None."""
    vs = sorted(set(vertices))
    if len(vs) != len(vertices) or not vs:
        return None
    if len(vs) == 1:
        return (vs[0],)
    mask = 0
    for v in vs:
        mask |= 1 << v
    inner = {v: g.adj[v] & mask for v in vs}
    ends = [v for v in vs if bin(inner[v]).count("1") == 1]
    if len(ends) != 2:
        return None
    seq = [ends[0]]
    seen = 1 << ends[0]
    while True:
        nxt = inner[seq[-1]] & ~seen
        if not nxt:
            break
        if nxt & (nxt - 1):
            return None
        v = nxt.bit_length() - 1
        seq.append(v)
        seen |= nxt
    if len(seq) != len(vs) or not is_induced_path(g, seq):
        return None
    return tuple(seq)


def paper_witness(g: LabeledGn, e: tuple[int, int], mode: str) -> Witness:
    """Ordered induced n-vertex path in ``G_n`` with ``e`` deleted or added,
    computed from the explicit witness set of the edge's case."""
    if g.n < 6:
        raise DomainError("witness formulas require n >= 6")
    ec = classify_edge(g, e, mode)
    labels = canonical_witness_set(ec.case, g.n, ec.canonical_j)
    verts = [vertex_of(g, GnLabel(l.side, ec.map.image(l.index, g.m))) for l in labels]
    perturbed = toggle_edge(g.graph, ec.edge, mode == ADD)
    path = order_as_path(perturbed, verts)
    if path is None or len(path) != g.n:
        names = ",".join(str(label_of(g, v)) for v in verts)
        raise WitnessConsistencyError(
            f"case {ec.case} for {mode} {ec.edge} in G_{g.n}: {{{names}}} is not an induced P_{g.n}"
        )
    return path


def is_h_is(g: Graph, h: Graph) -> bool:
    """Early-exit form of :func:`verify_h_is`: freeness, then additions, then
    deletions."""
    if path_order(h) is not None:
        return kernels.is_path_saturated(g.adj, h.order)
    if g.order > GENERAL_H_MAX_ORDER:
        raise CapacityError(f"general targets support host order <= {GENERAL_H_MAX_ORDER}")
    if find_induced_subgraph(g, h) is not None:
        return False
    for e in g.non_edges():
        if find_induced_subgraph(toggle_edge(g, e, True), h) is None:
            return False
    for e in g.edges():
        if find_induced_subgraph(toggle_edge(g, e, False), h) is None:
            return False
    return True
