"""Maximal biclique enumeration in a bipartite graph ``G[L, R]``.

Branches over the right-hand side in ascending order, carrying the current
left set, the candidate right vertices and the already-processed (excluded)
right vertices, in the manner of Zhang et al.'s MBEA.  Every biclique of a
bipartite graph is induced, so the results are the MIBs of ``G[L, R]``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .graph import Biclique, Graph, canonical_pair, mask_of


def bipartite_masks(masks: Sequence[int], l: int, r: int) -> Iterator[tuple[int, int]]:
    """Yield ``(a, b)`` with ``a ⊆ l`` and ``b ⊆ r`` for every maximal biclique."""
    # right vertices with no left neighbour can never be in a biclique
    p0 = 0
    t = r
    while t:
        low = t & -t
        if masks[low.bit_length() - 1] & l:
            p0 |= low
        t ^= low
    if not p0:
        return
    # pre-order: a node is reported when popped, then its children are pushed
    stack = [(l, 0, p0, 0, False)]
    while stack:
        left, right, p, q, report = stack.pop()
        if report:
            yield left, right
        children = []
        while p:
            low = p & -p
            p ^= low
            new_left = left & masks[low.bit_length() - 1]
            new_right = right | low
            new_q = 0
            maximal = True
            t = q
            while t:
                lq = t & -t
                t ^= lq
                nq = masks[lq.bit_length() - 1] & new_left
                if nq == new_left:
                    maximal = False
                    break
                if nq:
                    new_q |= lq
            if maximal:
                new_p = 0
                t = p
                while t:
                    lp = t & -t
                    t ^= lp
                    np_ = masks[lp.bit_length() - 1] & new_left
                    if np_ == new_left:
                        new_right |= lp
                    elif np_:
                        new_p |= lp
                children.append((new_left, new_right, new_p, new_q, True))
            q |= low
        children.reverse()
        stack.extend(children)


def enumerate_bipartite_mibs(g: Graph, l: Iterable[int], r: Iterable[int]) -> Iterator[Biclique]:
    lm, rm = mask_of(l), mask_of(r)
    if lm & rm or lm | rm != g.all_mask:
        raise ValueError("l and r must partition the vertex set")
    if not (g.is_independent_mask(lm) and g.is_independent_mask(rm)):
        raise ValueError("l and r must both be independent sets")
    for a, b in bipartite_masks(g.masks, lm, rm):
        yield Biclique.from_masks(*canonical_pair(a, b))
