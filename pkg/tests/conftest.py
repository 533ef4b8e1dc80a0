import random

import pytest

from pnsat import _kernels_py
from pnsat.graph import Graph, from_edges

try:
    from pnsat import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
BACKENDS.append(
    pytest.param(
        _kernels_c,
        id="cython",
        marks=pytest.mark.skipif(_kernels_c is None, reason="extension not built"),
    )
)


@pytest.fixture(params=BACKENDS)
def kern(request):
    return request.param


def random_graph(rng: random.Random, order: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(order) for v in range(u + 1, order) if rng.random() < p]
    return from_edges(order, edges)


_ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    failed = rep.failed
    if rep.when == "call" or (failed and rep.when == "setup"):
        _ACCEPTANCE.append((mark.args[0], "FAIL" if failed else "PASS", mark.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from pnsat import BACKEND

    terminalreporter.section(f"acceptance criteria ({BACKEND} kernels)")
    for cid, status, title in sorted(_ACCEPTANCE, key=lambda r: int(r[0][2:])):
        terminalreporter.write_line(f"{cid} {status} {title}")
