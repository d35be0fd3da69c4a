"""Odd cycle transversal decompositions ``G[L, R, O]``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, mask_of, members


@dataclass(frozen=True)
class OctDecomposition:
    l: frozenset[int]
    r: frozenset[int]
    o: frozenset[int]

    def __init__(self, l: Iterable[int], r: Iterable[int], o: Iterable[int]):
        object.__setattr__(self, "l", frozenset(l))
        object.__setattr__(self, "r", frozenset(r))
        object.__setattr__(self, "o", frozenset(o))

    def masks(self) -> tuple[int, int, int]:
        return mask_of(self.l), mask_of(self.r), mask_of(self.o)

    @property
    def n_o(self) -> int:
        return len(self.o)


def verify(g: Graph, d: OctDecomposition) -> bool:
    """True iff L, R, O partition V(g) and both L and R are independent."""
    l, r, o = d.masks()
    if l & r or l & o or r & o:
        return False
    if l | r | o != g.all_mask:
        return False
    return g.is_independent_mask(l) and g.is_independent_mask(r)


def two_color(g: Graph, vertices: Iterable[int]) -> tuple[int, int] | None:
    """2-colour the subgraph induced on ``vertices``; ``None`` if it has an odd cycle.

    Colour classes come back as masks ``(left, right)``; every component's
    smallest vertex lands on the left.
    """
    allowed = mask_of(vertices)
    color: dict[int, int] = {}
    for start in members(allowed):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in members(g.masks[u] & allowed):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    left = mask_of(v for v, c in color.items() if c == 0)
    return left, allowed & ~left


def greedy_oct(g: Graph) -> OctDecomposition:
    """BFS 2-colouring that drops conflicting vertices into O.

    Components are started from their smallest uncoloured vertex; vertices are
    coloured when dequeued, taking the colour opposite to their already
    coloured neighbours, or moving to O when those neighbours use both colours.
    """
    color = [-1] * g.n
    in_oct = [False] * g.n
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            used = 0
            for w in members(g.masks[u]):
                if color[w] >= 0:
                    used |= 1 << color[w]
            if used == 0b11:
                in_oct[u] = True
                continue
            color[u] = 1 if used == 0b01 else 0
            for w in members(g.masks[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return OctDecomposition(
        (v for v in range(g.n) if color[v] == 0),
        (v for v in range(g.n) if color[v] == 1),
        (v for v in range(g.n) if in_oct[v]),
    )


def decomposition_from_oct(g: Graph, o: Iterable[int]) -> OctDecomposition:
    """Recover L and R from a user-supplied OCT set by 2-colouring ``G - O``."""
    o = frozenset(o)
    for v in o:
        if not 0 <= v < g.n:
            raise ValueError(f"OCT vertex {v} out of range for n={g.n}")
    coloring = two_color(g, (v for v in range(g.n) if v not in o))
    if coloring is None:
        raise ValueError("removing the given OCT set does not leave a bipartite graph")
    left, right = coloring
    return OctDecomposition(members(left), members(right), o)
