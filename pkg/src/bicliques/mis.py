"""Maximal independent set enumeration on induced subgraphs."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import _kernels
from ._fallback import iter_mis
from .graph import Graph, mask_of, members


def mis_masks(masks: Sequence[int], restrict: int) -> Iterator[int]:
    """MISs of the subgraph induced on ``restrict``, as global bitmasks.

    Sets are emitted in lexicographic order of their sorted member lists.  An
    empty ``restrict`` yields the empty set once.  Subgraphs of up to 64
    vertices are relabelled and handed to the compiled kernel when present.
    """
    if not restrict or not _kernels.COMPILED:
        return iter_mis(masks, restrict)
    verts = list(members(restrict))
    if len(verts) > _kernels.MAX_SMALL:
        return iter_mis(masks, restrict)
    return _relabelled(masks, restrict, verts)


def _relabelled(masks: Sequence[int], restrict: int, verts: list[int]) -> Iterator[int]:
    index = {v: i for i, v in enumerate(verts)}
    local = []
    for v in verts:
        lm = 0
        for w in members(masks[v] & restrict):
            lm |= 1 << index[w]
        local.append(lm)
    bits = [1 << v for v in verts]
    for lm in _kernels.impl.mis_small(local):
        out = 0
        while lm:
            low = lm & -lm
            out |= bits[low.bit_length() - 1]
            lm ^= low
        yield out


def enumerate_mis(g: Graph, restrict: Iterable[int] | None = None) -> Iterator[frozenset[int]]:
    """Every MIS of ``g[restrict]`` exactly once (the whole graph by default).

    >>> from bicliques.graph import Graph
    >>> [sorted(s) for s in enumerate_mis(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))]
    [[0, 2], [1, 3]]
    """
    if restrict is None:
        rm = g.all_mask
    else:
        rm = mask_of(restrict)
        if rm & ~g.all_mask:
            raise ValueError("restrict contains vertices outside the graph")
    for s in mis_masks(g.masks, rm):
        yield frozenset(members(s))
