import random

import pytest

from bicliques import _kernels
from bicliques.graph import Graph

COUNTEREXAMPLE_EDGES = [(0, 2), (1, 2), (1, 5), (2, 4), (2, 5), (3, 5), (3, 4), (4, 5)]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def counterexample_graph() -> Graph:
    return Graph(6, COUNTEREXAMPLE_EDGES)


def named_graphs() -> dict[str, Graph]:
    return {"K3": complete(3), "C4": cycle(4), "C5": cycle(5), "P3": path(3), "counterexample": counterexample_graph()}


def random_mis(g: Graph, rng: random.Random) -> list[int]:
    order = list(range(g.n))
    rng.shuffle(order)
    chosen: list[int] = []
    for v in order:
        if not any(g.has_edge(v, u) for u in chosen):
            chosen.append(v)
    return sorted(chosen)


@pytest.fixture(params=["compiled", "pure"])
def kernel(request):
    """Run a test once per kernel set, restoring the default afterwards."""
    before = _kernels.backend()
    if request.param == "compiled" and not _kernels.COMPILED:
        try:
            _kernels.use("compiled")
        except ImportError:
            pytest.skip("compiled extension not built")
    _kernels.use(request.param)
    yield request.param
    _kernels.use(before)
