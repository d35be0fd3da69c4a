"""Maximal crossing bicliques: ``A × B`` with ``A`` inside a designated independent set.

The search seeds one bag per vertex ``v`` of the designated set ``X`` (in ID
order) with a blueprint per MIS of ``N(v)``, then grows bags depth-first by
adding later ``X`` vertices.  Blueprints that can no longer become maximal are
dropped; ``next`` skips branches that would only recreate one.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .blueprint import Blueprint, evaluate
from .graph import Biclique, Graph, canonical_pair, mask_of, members
from .mis import mis_masks


def mcb_masks(
    g: Graph, x: int, y: int, prune: bool = True, stats: dict | None = None
) -> Iterator[tuple[int, int]]:
    """Yield ``(a, b)`` masks, ``a ⊆ x`` and ``b ⊆ y``, for every maximal crossing biclique.

    Only the subgraph induced on ``x ∪ y`` is consulted.  ``prune=False`` turns
    off the ``next`` cut-off and the per-branch duplicate tables; the caller
    must then deduplicate.
    """
    masks = g.masks
    # vertices with no partner on the other side can never be in a crossing biclique
    x = mask_of(v for v in members(x) if masks[v] & y)
    y = mask_of(v for v in members(y) if masks[v] & x)
    if not x:
        return
    order = list(members(x))
    bags = []
    for idx, v in enumerate(order):
        bit = 1 << v
        s_w = x & ~((bit << 1) - 1)
        s_p = x & (bit - 1)
        nv = masks[v] & y
        bag = []
        for cc_i in mis_masks(masks, nv):
            bp = Blueprint(bit, 0, cc_i, s_w, s_p, 0, nv & ~cc_i, 0)
            if stats is not None:
                stats["initial"] = stats.get("initial", 0) + 1
            keep, maximal, nxt = evaluate(g, bp)
            if not keep:
                continue
            if maximal:
                yield bit, cc_i
            bag.append(bp._replace(next=nxt))
        if bag:
            bags.append((bit, s_w, s_p, bag))
    bags.reverse()
    stack = bags
    while stack:
        s_i, s_w, s_p, bag = stack.pop()
        children = []
        for w in members(s_w):
            wbit = 1 << w
            s_w2 = s_w & ~((wbit << 1) - 1)
            s_p2 = s_p | (s_w & (wbit - 1))
            s_i2 = s_i | wbit
            nw = masks[w]
            seen: set[int] = set()
            new_bag = []
            for p in bag:
                if prune and w > p.next:
                    continue
                cc_i = p.cc_i & nw
                if not cc_i:
                    continue
                if stats is not None:
                    stats["expansions"] = stats.get("expansions", 0) + 1
                bp = Blueprint(s_i2, 0, cc_i, s_w2, s_p2, 0, p.cc_o & nw, 0)
                keep, maximal, nxt = evaluate(g, bp)
                if not keep:
                    continue
                if prune:
                    if cc_i in seen:
                        continue
                    seen.add(cc_i)
                if maximal:
                    yield s_i2, cc_i
                new_bag.append(bp._replace(next=nxt))
            if new_bag:
                children.append((s_i2, s_w2, s_p2, new_bag))
        children.reverse()
        stack.extend(children)


def mcb(g: Graph, x: Iterable[int], prune: bool = True, stats: dict | None = None) -> Iterator[Biclique]:
    """Every maximal crossing biclique of ``g`` for the independent set ``x``, once each."""
    xm = mask_of(x)
    if xm & ~g.all_mask:
        raise ValueError("designated set contains vertices outside the graph")
    if not g.is_independent_mask(xm):
        raise ValueError("designated set must be independent")
    seen = None if prune else set()
    for a, b in mcb_masks(g, xm, g.all_mask & ~xm, prune=prune, stats=stats):
        if seen is not None:
            if (a, b) in seen:
                continue
            seen.add((a, b))
        yield Biclique.from_masks(*canonical_pair(a, b))
