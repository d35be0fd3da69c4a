"""Maximal induced biclique enumeration driven by an odd cycle transversal.

Three phases over a decomposition ``G[L, R, O]``:

1. maximal bicliques of the bipartite part, kept when no OCT vertex extends them;
2. for every MIS ``S`` of ``G[O]`` and every ``s ∈ S``, seed blueprints whose
   ``s_i`` side holds only ``s`` (MISs of ``N(s)`` plus two crossing-biclique
   searches that bring in ``L``/``R`` vertices non-adjacent to ``s``);
3. grow those blueprints by later vertices of ``S``.

A biclique can surface once per MIS of ``G[O]`` containing its OCT part, so
the stream is filtered through a seen-set.
"""

from __future__ import annotations

from typing import Iterator

from .bipartite import bipartite_masks
from .blueprint import Blueprint, evaluate
from .graph import Biclique, Graph, canonical_pair, members
from .mcb import mcb_masks
from .mis import mis_masks
from .oct import OctDecomposition, verify


def octmib_masks(
    g: Graph, l: int, r: int, o: int, prune: bool = True, stats: dict | None = None
) -> Iterator[tuple[int, int]]:
    """Yield each MIB once as a canonical ``(a, b)`` mask pair."""
    masks = g.masks
    # isolated vertices belong to no biclique
    active = 0
    for v in range(g.n):
        if masks[v]:
            active |= 1 << v
    l &= active
    r &= active
    o &= active
    seen: set[tuple[int, int]] = set()

    for a, b in bipartite_masks(masks, l, r):
        if o & ((g.indep_mask(a) & g.common_mask(b)) | (g.common_mask(a) & g.indep_mask(b))):
            continue
        key = canonical_pair(a, b)
        seen.add(key)
        if stats is not None:
            stats["bipartite"] = stats.get("bipartite", 0) + 1
        yield key

    if not o:
        return
    lr = l | r
    for s_mask in mis_masks(masks, o):
        for a, b in _grow_over(g, s_mask, l, r, o, lr, prune, stats):
            key = canonical_pair(a, b)
            if key in seen:
                continue
            seen.add(key)
            yield key


def _seed_candidates(g: Graph, s: int, l: int, r: int) -> Iterator[tuple[int, int]]:
    """``(cc_i, if_i)`` pairs for the initial blueprints of OCT vertex ``s``."""
    masks = g.masks
    n_s = masks[s]
    nbar_l = l & ~n_s
    nbar_r = r & ~n_s
    nbar = nbar_l | nbar_r
    # round 1: MISs of N(s) that no L/R non-neighbour of s could join
    for cc_i in mis_masks(masks, n_s):
        if not g.common_mask(cc_i) & nbar:
            yield cc_i, 0
    # round 2: crossing bicliques with A among the L non-neighbours
    for a, b in mcb_masks(g, nbar_l, n_s & ~l):
        extra = nbar_r & g.indep_mask(a) & g.common_mask(b)
        yield b, a | extra
    # round 3: A among the R non-neighbours, unless an L vertex fits (round 2 has it)
    for a, b in mcb_masks(g, nbar_r, n_s & ~r):
        if not nbar_l & g.indep_mask(a) & g.common_mask(b):
            yield b, a


def _grow_over(
    g: Graph, s_mask: int, l: int, r: int, o: int, lr: int, prune: bool, stats: dict | None
) -> Iterator[tuple[int, int]]:
    masks = g.masks
    bags = []
    for s in members(s_mask):
        bit = 1 << s
        s_w = s_mask & ~((bit << 1) - 1)
        s_p = s_mask & (bit - 1)
        n_s = masks[s]
        o_if = o & ~(n_s | s_mask)
        if_base = lr & ~n_s
        bag = []
        for cc_i, if_i in _seed_candidates(g, s, l, r):
            bp = Blueprint(bit, if_i, cc_i, s_w, s_p, if_base & ~if_i, n_s & ~cc_i, o_if)
            if stats is not None:
                stats["initial"] = stats.get("initial", 0) + 1
            keep, maximal, nxt = evaluate(g, bp)
            if not keep:
                continue
            if maximal:
                yield bit | if_i, cc_i
            bag.append(bp._replace(next=nxt))
        if bag:
            bags.append((bit, s_w, s_p, o_if, bag))

    bags.reverse()
    stack = bags
    while stack:
        s_i, s_w, s_p, o_if, bag = stack.pop()
        children = []
        for w in members(s_w):
            wbit = 1 << w
            nw = masks[w]
            s_i2 = s_i | wbit
            s_w2 = s_w & ~((wbit << 1) - 1)
            s_p2 = s_p | (s_w & (wbit - 1))
            o_if2 = o_if & ~nw
            seen: set[tuple[int, int]] = set()
            new_bag = []
            for p in bag:
                if prune and w > p.next:
                    continue
                cc_i = p.cc_i & nw
                if not cc_i:
                    continue
                if stats is not None:
                    stats["expansions"] = stats.get("expansions", 0) + 1
                if_i = p.if_i & ~nw
                bp = Blueprint(s_i2, if_i, cc_i, s_w2, s_p2, p.if_o & ~nw, p.cc_o & nw, o_if2)
                keep, maximal, nxt = evaluate(g, bp)
                if not keep:
                    continue
                if prune:
                    key = (cc_i, if_i)
                    if key in seen:
                        continue
                    seen.add(key)
                if maximal:
                    yield s_i2 | if_i, cc_i
                new_bag.append(bp._replace(next=nxt))
            if new_bag:
                children.append((s_i2, s_w2, s_p2, o_if2, new_bag))
        children.reverse()
        stack.extend(children)


def octmib(g: Graph, d: OctDecomposition, prune: bool = True, stats: dict | None = None) -> Iterator[Biclique]:
    """Every maximal induced biclique of ``g`` exactly once.

    ``prune=False`` disables the ``next`` cut-off and the per-branch duplicate
    tables (slow mode, same output set).
    """
    if not verify(g, d):
        raise ValueError("invalid OCT decomposition for this graph")
    l, r, o = d.masks()
    for a, b in octmib_masks(g, l, r, o, prune=prune, stats=stats):
        yield Biclique.from_masks(a, b)


def count_mibs(g: Graph, d: OctDecomposition) -> int:
    return sum(1 for _ in octmib(g, d))
