"""Pure-Python kernels.

Same contract as the compiled ``_speedups`` module: graphs are given as a list
of adjacency bitmasks over local vertex IDs ``0..k-1``.  These are used when
the extension is not built (or ``BICLIQUES_PURE=1``) and as the reference the
compiled versions are tested against.
"""

from __future__ import annotations

from typing import Iterator, Sequence

MAX_SMALL = 64
MAX_ORACLE = 20


def iter_mis(masks: Sequence[int], restrict: int) -> Iterator[int]:
    """Maximal independent sets of the subgraph induced on ``restrict``.

    Depth-first search that adds vertices in ascending order, so sets come
    out sorted lexicographically by their member lists.  ``x`` holds vertices
    already tried at an ancestor; a branch dies as soon as one of them can no
    longer be dominated by what is left in ``p``.
    """
    if not restrict:
        yield 0
        return
    stack = [(0, restrict, 0)]
    pop = stack.pop
    while stack:
        r, p, x = pop()
        if not p:
            if not x:
                yield r
            continue
        t = x
        dead = False
        while t:
            low = t & -t
            if not masks[low.bit_length() - 1] & p:
                dead = True
                break
            t ^= low
        if dead:
            continue
        children = []
        rest = p
        while rest:
            low = rest & -rest
            rest ^= low
            nv = masks[low.bit_length() - 1]
            children.append((r | low, rest & ~nv, x & ~nv))
            x |= low
        children.reverse()
        stack.extend(children)


def mis_small(adj: Sequence[int]) -> Iterator[int]:
    return iter_mis(adj, (1 << len(adj)) - 1)


def all_mibs_small(adj: Sequence[int]) -> set[tuple[int, int]]:
    """Every maximal induced biclique as a canonical ``(a, b)`` mask pair.

    For each non-empty independent ``a`` and each MIS ``b`` of the common
    neighbourhood of ``a``, the pair is kept when no vertex can join ``a``.
    """
    n = len(adj)
    if n > MAX_ORACLE:
        raise ValueError(f"oracle refuses graphs with more than {MAX_ORACLE} vertices (n={n})")
    full = (1 << n) - 1
    out: set[tuple[int, int]] = set()
    # incremental OR/AND over subsets indexed by their lowest bit
    union = [0] * (1 << n)
    common = [full] * (1 << n)
    independent = [True] * (1 << n)
    for a in range(1, 1 << n):
        low = a & -a
        v = low.bit_length() - 1
        prev = a ^ low
        independent[a] = independent[prev] and not adj[v] & prev
        union[a] = union[prev] | adj[v]
        common[a] = common[prev] & adj[v]
        if not independent[a] or not common[a]:
            continue
        grow_a = full & ~(union[a] | a)
        for b in iter_mis(adj, common[a]):
            c = full
            t = b
            while t:
                lb = t & -t
                c &= adj[lb.bit_length() - 1]
                t ^= lb
            if grow_a & c:
                continue
            out.add((a, b) if low < (b & -b) else (b, a))
    return out
