"""Scan graph6 corpora and complete labeled graph spaces for H-IS graphs.

Scans only prove what they enumerate: a zero-hit sweep of all graphs up to
order 7 corroborates, but does not prove, that no P_4-IS graph exists.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ._backend import kernels
from .graph import (
    ISO_MAX_ORDER,
    CapacityError,
    Graph,
    emit_graph6,
    is_isomorphic,
    parse_graph6,
    read_graph6_lines,
)
from .induced_path import path_order
from .saturation import is_h_is

EXHAUST_MAX_ORDER = 7
_CHUNK = 1 << 15


class ScanError(ValueError):
    def __init__(self, index: int, message: str):
        super().__init__(f"record {index}: {message}")
        self.index = index


@dataclass
class ScanSummary:
    description: str
    graphs_examined: int = 0
    hits: list[tuple[str, int]] = field(default_factory=list)
    elapsed: float = 0.0
    errors: list[tuple[int, str]] = field(default_factory=list)

    def unique_hits(self) -> list[tuple[str, int]]:
        """Hits with isomorphic duplicates removed, first occurrence kept.

        Graphs above the isomorphism tester's range are deduplicated by exact
        graph6 text only.
        """
        kept: list[tuple[str, int, Graph]] = []
        seen_text = set()
        for text, order in self.hits:
            if text in seen_text:
                continue
            seen_text.add(text)
            g = parse_graph6(text)
            if order <= ISO_MAX_ORDER and any(
                o == order and is_isomorphic(g, other) for _, o, other in kept
            ):
                continue
            kept.append((text, order, g))
        return [(t, o) for t, o, _ in kept]

    def to_dict(self) -> dict:
        return {
            "filter": self.description,
            "graphs_examined": self.graphs_examined,
            "hits": [{"graph6": t, "order": o} for t, o in self.hits],
            "unique_hits": [{"graph6": t, "order": o} for t, o in self.unique_hits()],
            "errors": [{"record": i, "message": m} for i, m in self.errors],
            "elapsed_seconds": round(self.elapsed, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        unique = self.unique_hits()
        lines = [
            f"filter {self.description}",
            f"examined {self.graphs_examined}",
            f"hits {len(self.hits)}",
            f"unique_hits {len(unique)}",
        ]
        lines += [f"hit {t} order {o}" for t, o in unique]
        lines += [f"error record {i}: {m}" for i, m in self.errors]
        lines.append(f"elapsed {self.elapsed:.3f}s")
        return "\n".join(lines)


def _describe(h: Graph) -> str:
    if path_order(h) is not None:
        return f"P_{h.order}-induced-saturated"
    return f"H-induced-saturated, H={emit_graph6(h)}"


def _parallel_map(fn, items: list, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def scan_stream(
    lines: Iterable[str], h: Graph, strict: bool = False, workers: int = 1
) -> ScanSummary:
    """Test every graph6 record in ``lines``; hits keep input order.

    A malformed record raises :class:`ScanError` under ``strict`` and is
    otherwise logged in ``errors`` and skipped.
    """
    start = time.perf_counter()
    summary = ScanSummary(_describe(h))
    graphs: list[tuple[str, Graph]] = []
    for idx, text in read_graph6_lines(lines):
        try:
            graphs.append((text, parse_graph6(text)))
        except ValueError as exc:
            if strict:
                raise ScanError(idx, str(exc)) from exc
            summary.errors.append((idx, str(exc)))
    verdicts = _parallel_map(lambda item: is_h_is(item[1], h), graphs, workers)
    summary.graphs_examined = len(graphs)
    summary.hits = [(text, g.order) for (text, g), ok in zip(graphs, verdicts) if ok]
    summary.elapsed = time.perf_counter() - start
    return summary


def labeled_graph(order: int, mask: int) -> Graph:
    """Labeled graph whose edge set is ``mask`` over pairs in graph6 order."""
    return Graph(order, tuple(kernels.adjacency_from_mask(order, mask)))


def exhaust_labeled(order: int, h: Graph, workers: int = 1) -> ScanSummary:
    """Test all ``2 ** (order choose 2)`` labeled graphs on ``order`` vertices.

    Orders 0 and 1 are vacuous hits for any target with at least two vertices.
    """
    if not 0 <= order <= EXHAUST_MAX_ORDER:
        raise CapacityError(
            f"exhaustive labeled scan supports order <= {EXHAUST_MAX_ORDER}; "
            "use scan_stream with an external corpus for larger orders"
        )
    start = time.perf_counter()
    total = 1 << (order * (order - 1) // 2)
    chunks = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if path_order(h) is not None:
        k = h.order

        def run(chunk: tuple[int, int]) -> list[int]:
            return kernels.exhaust_path_target(order, k, chunk[0], chunk[1])
    else:

        def run(chunk: tuple[int, int]) -> list[int]:
            return [m for m in range(*chunk) if is_h_is(labeled_graph(order, m), h)]

    masks = [m for part in _parallel_map(run, chunks, workers) for m in part]
    summary = ScanSummary(f"{_describe(h)}, all labeled graphs of order {order}")
    summary.graphs_examined = total
    summary.hits = [(emit_graph6(labeled_graph(order, m)), order) for m in masks]
    summary.elapsed = time.perf_counter() - start
    return summary


def iter_labeled_graphs(order: int) -> Iterable[Graph]:
    if not 0 <= order <= EXHAUST_MAX_ORDER:
        raise CapacityError(f"labeled enumeration supports order <= {EXHAUST_MAX_ORDER}")
    for mask in range(1 << (order * (order - 1) // 2)):
        yield labeled_graph(order, mask)


def hit_graphs(summary: ScanSummary, unique: bool = True) -> list[Graph]:
    hits = summary.unique_hits() if unique else summary.hits
    return [parse_graph6(t) for t, _ in hits]


def find_hit_isomorphic_to(summary: ScanSummary, g: Graph) -> Optional[str]:
    for text, order in summary.hits:
        if order == g.order and is_isomorphic(parse_graph6(text), g):
            return text
    return None
