"""Lexicographic-order MIB enumeration (Dias et al., with two fixes).

Bicliques are compared by the sorted list of their vertices.  A connected
induced biclique determines its own bipartition, so that list is a total
order on MIBs.  Candidates wait in a min-heap; a separate set remembers every
biclique ever inserted so nothing is queued twice.

``dias_uncorrected`` keeps the original control flow and is only here to show
what it misses.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator

from .graph import Biclique, Graph, canonical_pair, mask_of, members


def lex_key(b: Biclique) -> tuple[int, ...]:
    return b.vertices


def _key(union: int) -> tuple[int, ...]:
    return tuple(members(union))


def extends_masks(g: Graph, x: int, y: int) -> bool:
    """Whether some MIB has ``x`` on one side and ``y`` on the other."""
    if x & y:
        return False
    if not (g.is_independent_mask(x) and g.is_independent_mask(y)):
        return False
    if x and y:
        return g.common_mask(x) & y == y
    if x:
        return bool(g.common_mask(x))
    if y:
        return bool(g.common_mask(y))
    return g.m > 0


def least_masks(g: Graph, x: int, y: int) -> tuple[int, int] | None:
    """Lexicographically least MIB with ``x`` on side A and ``y`` on side B.

    Greedy: walk vertices in ID order and keep each one that still leaves the
    pair extendable.  Whichever side a vertex can join is forced once the
    other side is non-empty.
    """
    if not extends_masks(g, x, y):
        return None
    masks = g.masks
    full = g.all_mask
    a, b = x, y
    union_a, union_b = g.union_mask(a), g.union_mask(b)
    common_a, common_b = g.common_mask(a), g.common_mask(b)
    floor = 0
    while True:
        cand = ((~union_a & common_b) | (common_a & ~union_b)) & full & ~(a | b | floor)
        if not cand:
            break
        bit = cand & -cand
        floor = (bit << 1) - 1
        mv = masks[bit.bit_length() - 1]
        if not union_a & bit and common_b & bit and (b or common_a & mv):
            a |= bit
            union_a |= mv
            common_a &= mv
        elif not union_b & bit and common_a & bit and (a or common_b & mv):
            b |= bit
            union_b |= mv
            common_b &= mv
    return a, b


def extends_to_biclique(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xm, ym = mask_of(x), mask_of(y)
    if xm & ym:
        raise ValueError("x and y must be disjoint")
    return extends_masks(g, xm, ym)


def least_biclique_containing(g: Graph, x: Iterable[int], y: Iterable[int]) -> Biclique | None:
    xm, ym = mask_of(x), mask_of(y)
    if xm & ym:
        raise ValueError("x and y must be disjoint")
    found = least_masks(g, xm, ym)
    return None if found is None else Biclique.from_masks(*found)


def _some_l_extends(g: Graph, xp: int, yp: int, pool: int) -> bool:
    """Is there an ``l`` in ``pool`` such that ``xp ∪ yp ∪ {l}`` still extends?"""
    if not pool:
        return False
    common_x = g.common_mask(xp)
    union_y = g.union_mask(yp)
    if pool & common_x & ~union_y & ~yp:
        return True
    side_x = pool & ~(g.union_mask(xp) | xp) & g.common_mask(yp)
    if yp:
        return bool(side_x)
    masks = g.masks
    while side_x:
        low = side_x & -side_x
        if common_x & masks[low.bit_length() - 1]:
            return True
        side_x ^= low
    return False


def _lex_masks(g: Graph, corrected: bool) -> Iterator[tuple[int, int]]:
    first = least_masks(g, 0, 0)
    if first is None:
        return
    masks = g.masks
    heap: list[tuple[tuple[int, ...], int, int]] = []
    inserted: set[int] = set()

    def push(pair: tuple[int, int] | None) -> None:
        if pair is None:
            return
        union = pair[0] | pair[1]
        if union in inserted:
            return
        inserted.add(union)
        a, b = canonical_pair(*pair)
        heapq.heappush(heap, (_key(union), a, b))

    push(first)
    while heap:
        _, x, y = heapq.heappop(heap)
        yield x, y
        used = x | y
        for j in range(g.n):
            jbit = 1 << j
            if used & jbit:
                continue
            below = jbit - 1
            nj = masks[j]
            for side, other in ((x, y), (y, x)):
                xj = side & below
                yj = other & below
                if not (xj & nj or yj & ~nj or (corrected and not yj)):
                    continue
                xp = (xj & ~nj) | jbit
                yp = yj & nj
                if _some_l_extends(g, xp, yp, below & ~used):
                    continue
                found = least_masks(g, xp, yp)
                if found is not None:
                    push(found)
                elif corrected and not yp:
                    for v in members(nj):
                        push(least_masks(g, masks[v] & xp, 1 << v))


def lexmib(g: Graph) -> Iterator[Biclique]:
    """Every MIB of ``g`` once, in strictly increasing :func:`lex_key` order."""
    for a, b in _lex_masks(g, corrected=True):
        yield Biclique.from_masks(a, b)


def dias_uncorrected(g: Graph) -> Iterator[Biclique]:
    """The original procedure without either fix; can miss MIBs."""
    for a, b in _lex_masks(g, corrected=False):
        yield Biclique.from_masks(a, b)
