"""Blueprints: the bookkeeping record behind a growing biclique.

A blueprint stands for the induced biclique ``(s_i ∪ if_i) × cc_i``.  ``s_*``
fields are drawn from the independent set ``S`` being grown over (split by
the vertex-ID order into inside / waiting / processed), ``if_*`` hold the
non-``S`` vertices independent from ``s_i`` and ``cc_*`` those completely
connected to it; the ``_o`` variants are the ones currently left out.
``o_if`` are OCT vertices outside ``S`` that could join the ``s_i`` side.

All sets are int bitmasks.  The crossing-biclique search uses the same record
with ``if_i``, ``if_o`` and ``o_if`` empty.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .graph import Graph, lowest, mask_of

INFINITY = float("inf")


class Blueprint(NamedTuple):
    s_i: int
    if_i: int
    cc_i: int
    s_w: int
    s_p: int
    if_o: int
    cc_o: int
    o_if: int
    next: float | int = INFINITY

    @classmethod
    def from_sets(
        cls,
        s_i: Iterable[int] = (),
        if_i: Iterable[int] = (),
        cc_i: Iterable[int] = (),
        s_w: Iterable[int] = (),
        s_p: Iterable[int] = (),
        if_o: Iterable[int] = (),
        cc_o: Iterable[int] = (),
        o_if: Iterable[int] = (),
        next: float | int = INFINITY,
    ) -> "Blueprint":
        return cls(
            mask_of(s_i), mask_of(if_i), mask_of(cc_i), mask_of(s_w),
            mask_of(s_p), mask_of(if_o), mask_of(cc_o), mask_of(o_if), next,
        )

    def biclique_masks(self) -> tuple[int, int]:
        return self.s_i | self.if_i, self.cc_i


def mcb_blueprint(s_i: int, cc_i: int, s_w: int, s_p: int, cc_o: int, next=INFINITY) -> Blueprint:
    """Reduced form used by the crossing-biclique search."""
    return Blueprint(s_i, 0, cc_i, s_w, s_p, 0, cc_o, 0, next)


def _common(g: Graph, s: int, stats: dict | None) -> int:
    if stats is not None:
        stats["edges"] = stats.get("edges", 0) + sum(g.degree(v) for v in _bits(s))
    return g.common_mask(s)


def _union(g: Graph, s: int, stats: dict | None) -> int:
    if stats is not None:
        stats["edges"] = stats.get("edges", 0) + sum(g.degree(v) for v in _bits(s))
    return g.union_mask(s)


def _bits(s: int):
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def _side_a_pool(g: Graph, b: Blueprint, stats: dict | None) -> int:
    """C(cc_i) ∩ I(if_i): vertices that could join the ``s_i ∪ if_i`` side."""
    return _common(g, b.cc_i, stats) & ~_union(g, b.if_i, stats) & ~b.if_i


def is_invalid(b: Blueprint) -> bool:
    return not b.cc_i


def not_future_max(g: Graph, b: Blueprint, stats: dict | None = None) -> bool:
    """True when the biclique can be extended by a vertex it may never gain later.

    (i) a processed ``S`` vertex, (ii) a left-out vertex on the ``cc`` side,
    or (iii) a left-out non-``S`` vertex on the ``s_i`` side.  For (ii) the
    completely-connected test runs over ``if_i ∪ s_i``, which keeps it defined
    when ``if_i`` is empty.
    """
    pool = _side_a_pool(g, b, stats)
    if b.s_p & pool or b.if_o & pool:
        return True
    cc_pool = ~_union(g, b.cc_i, stats) & _common(g, b.if_i | b.s_i, stats)
    return bool(b.cc_o & cc_pool)


def is_maximal(g: Graph, b: Blueprint, stats: dict | None = None) -> bool:
    return not (b.s_w | b.o_if) & _side_a_pool(g, b, stats)


def compute_next(g: Graph, b: Blueprint, stats: dict | None = None) -> float | int:
    """Smallest waiting ``S`` vertex that could join the ``s_i`` side, else infinity."""
    blockers = b.s_w & _side_a_pool(g, b, stats)
    return lowest(blockers) if blockers else INFINITY


def evaluate(g: Graph, b: Blueprint) -> tuple[bool, bool, float | int]:
    """``(future_maximal, maximal, next)`` in a single pass over the adjacency rows.

    ``maximal`` and ``next`` are only meaningful when ``future_maximal`` holds.
    """
    cc_i = b.cc_i
    if not cc_i:
        return False, False, INFINITY
    pool = g.common_mask(cc_i)
    if b.if_i:
        pool &= ~(g.union_mask(b.if_i) | b.if_i)
    if b.s_p & pool or b.if_o & pool:
        return False, False, INFINITY
    if b.cc_o and b.cc_o & ~g.union_mask(cc_i) & g.common_mask(b.if_i | b.s_i):
        return False, False, INFINITY
    blockers = b.s_w & pool
    if blockers:
        return True, False, (blockers & -blockers).bit_length() - 1
    return True, not b.o_if & pool, INFINITY
