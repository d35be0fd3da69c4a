"""Exponential-time ground truth for small graphs.

Two independent routes are provided so they can vouch for each other before
either is used to judge the fast enumerators:

* :func:`all_mibs` pairs every independent set with the MISs of its common
  neighbourhood (compiled kernel when available);
* :func:`naive_mibs` scans every assignment of vertices to side A, side B or
  neither, then filters by containment.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from . import _kernels
from ._fallback import MAX_ORACLE, iter_mis
from .graph import Biclique, Graph, canonical_pair, mask_of

NAIVE_MAX = 12


class OracleSizeError(ValueError):
    """The graph is too large for exhaustive enumeration."""


def all_mibs(g: Graph) -> set[Biclique]:
    if g.n > MAX_ORACLE:
        raise OracleSizeError(f"oracle refuses graphs with more than {MAX_ORACLE} vertices (n={g.n})")
    pairs = _kernels.impl.all_mibs_small(list(g.masks))
    return {Biclique.from_masks(a, b) for a, b in pairs}


def naive_mibs(g: Graph) -> set[Biclique]:
    if g.n > NAIVE_MAX:
        raise OracleSizeError(f"naive oracle refuses graphs with more than {NAIVE_MAX} vertices")
    found: set[tuple[frozenset[int], frozenset[int]]] = set()
    for assignment in product((0, 1, 2), repeat=g.n):
        a = [v for v, s in enumerate(assignment) if s == 1]
        b = [v for v, s in enumerate(assignment) if s == 2]
        if not a or not b or a[0] > b[0]:
            continue
        if any(g.has_edge(u, v) for i, u in enumerate(a) for v in a[i + 1:]):
            continue
        if any(g.has_edge(u, v) for i, u in enumerate(b) for v in b[i + 1:]):
            continue
        if all(g.has_edge(u, v) for u in a for v in b):
            found.add((frozenset(a), frozenset(b)))

    def contained(x, y):
        return x != y and (
            (x[0] <= y[0] and x[1] <= y[1]) or (x[0] <= y[1] and x[1] <= y[0])
        )

    return {
        Biclique(tuple(x[0]), tuple(x[1]))
        for x in found
        if not any(contained(x, y) for y in found)
    }


def crossing_oracle(g: Graph, x: Iterable[int]) -> set[Biclique]:
    """All maximal crossing bicliques ``A × B`` with ``A ⊆ x`` and ``B ⊆ V \\ x``."""
    if g.n > MAX_ORACLE:
        raise OracleSizeError(f"crossing oracle refuses graphs with more than {MAX_ORACLE} vertices")
    xm = mask_of(x)
    if not g.is_independent_mask(xm):
        raise ValueError("designated set must be independent")
    ym = g.all_mask & ~xm
    out = set()
    # every non-empty subset of x, walked as sub-masks
    sub = xm
    while sub:
        b_pool = g.common_mask(sub) & ym
        if b_pool:
            grow_a = g.indep_mask(sub) & xm
            for b in iter_mis(g.masks, b_pool):
                if not grow_a & g.common_mask(b):
                    out.add(canonical_pair(sub, b))
        sub = (sub - 1) & xm
    return {Biclique.from_masks(a, b) for a, b in out}


def naive_crossing(g: Graph, x: Iterable[int]) -> set[Biclique]:
    """Subset-pair scan for maximal crossing bicliques (independent of :func:`crossing_oracle`)."""
    xs = sorted(set(x))
    ys = [v for v in range(g.n) if v not in set(xs)]
    if len(xs) + len(ys) > NAIVE_MAX + 4:
        raise OracleSizeError("naive crossing scan is limited to 16 vertices")
    found = []
    for ai in range(1, 1 << len(xs)):
        a = [xs[i] for i in range(len(xs)) if ai >> i & 1]
        for bi in range(1, 1 << len(ys)):
            b = [ys[i] for i in range(len(ys)) if bi >> i & 1]
            if any(g.has_edge(u, v) for i, u in enumerate(b) for v in b[i + 1:]):
                continue
            if all(g.has_edge(u, v) for u in a for v in b):
                found.append((frozenset(a), frozenset(b)))
    return {
        Biclique(tuple(a), tuple(b))
        for a, b in found
        if not any((a, b) != (a2, b2) and a <= a2 and b <= b2 for a2, b2 in found)
    }
