"""Immutable undirected simple graphs and the set primitives shared by every enumerator.

Vertex sets are passed around internally as Python ``int`` bitmasks (bit ``v``
set means vertex ``v`` is a member).  The public helpers accept any iterable of
vertex IDs and return ``frozenset`` objects; the ``*_mask`` variants are what
the algorithms use in their inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> sorted(g.neighbors(1))
    [0, 2]
    """

    __slots__ = ("n", "m", "adjacency", "masks", "all_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if masks[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            m += 1
        self.n = n
        self.m = m
        self.masks = tuple(masks)
        self.adjacency = tuple(frozenset(members(x)) for x in masks)
        self.all_mask = (1 << n) - 1

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        edges = [(u, v) for u, mu in enumerate(masks) for v in members(mu) if u < v]
        return cls(len(masks), edges)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.masks[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return neighbors(self, v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # mask-level primitives

    def common_mask(self, s: int) -> int:
        """Vertices adjacent to every member of ``s`` (all vertices when ``s`` is empty)."""
        out = self.all_mask
        masks = self.masks
        while s and out:
            low = s & -s
            out &= masks[low.bit_length() - 1]
            s ^= low
        return out

    def union_mask(self, s: int) -> int:
        """Vertices adjacent to at least one member of ``s``."""
        out = 0
        masks = self.masks
        while s:
            low = s & -s
            out |= masks[low.bit_length() - 1]
            s ^= low
        return out

    def indep_mask(self, s: int) -> int:
        """Vertices outside ``s`` with no neighbor in ``s``."""
        return self.all_mask & ~(self.union_mask(s) | s)

    def is_independent_mask(self, s: int) -> bool:
        masks = self.masks
        t = s
        while t:
            low = t & -t
            if masks[low.bit_length() - 1] & s:
                return False
            t ^= low
        return True


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for graph with n={g.n}")


def _as_mask(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        _check_vertex(g, v)
        m |= 1 << v
    return m


def neighbors(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return g.adjacency[v]


def completely_connected(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """C(S): vertices outside ``s`` adjacent to every member of ``s``."""
    sm = _as_mask(g, s)
    if not sm:
        raise ValueError("completely_connected is undefined for the empty set")
    return frozenset(members(g.common_mask(sm) & ~sm))


def independent_from(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """I(S): vertices outside ``s`` with no neighbor in ``s``."""
    return frozenset(members(g.indep_mask(_as_mask(g, s))))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    return g.is_independent_mask(_as_mask(g, s))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s`` relabelled to ``0..|s|-1``.

    Returns the subgraph and ``id_map`` with ``id_map[new] == old``.
    """
    id_map = tuple(members(_as_mask(g, s)))
    index = {old: new for new, old in enumerate(id_map)}
    edges = [
        (index[u], index[v])
        for u in id_map
        for v in g.adjacency[u]
        if u < v and v in index
    ]
    return Graph(len(id_map), edges), id_map


def strip_isolates(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, (v for v in range(g.n) if g.masks[v]))


@dataclass(frozen=True, order=False)
class Biclique:
    """Induced biclique ``a × b`` in canonical form.

    ``a`` is always the side holding the smallest vertex of ``a ∪ b``, so two
    bicliques built from the same pair of sides compare equal whichever way
    round they were given.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(sorted(set(self.a)))
        b = tuple(sorted(set(self.b)))
        if not a or not b:
            raise ValueError("both sides of a biclique must be non-empty")
        if set(a) & set(b):
            raise ValueError(f"biclique sides overlap: {a} / {b}")
        if b[0] < a[0]:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_masks(cls, a: int, b: int) -> "Biclique":
        return cls(tuple(members(a)), tuple(members(b)))

    @classmethod
    def checked(cls, g: Graph, a: Iterable[int], b: Iterable[int]) -> "Biclique":
        """Build a biclique and verify that it is induced in ``g``."""
        bc = cls(tuple(a), tuple(b))
        if not is_induced_biclique(g, bc):
            raise ValueError(f"{bc} is not an induced biclique of {g!r}")
        return bc

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.a + self.b))

    def masks(self) -> tuple[int, int]:
        return mask_of(self.a), mask_of(self.b)

    def format(self) -> str:
        return " ".join(map(str, self.a)) + " | " + " ".join(map(str, self.b))

    def __str__(self) -> str:
        return "{%s}x{%s}" % (",".join(map(str, self.a)), ",".join(map(str, self.b)))


def canonical_pair(a: int, b: int) -> tuple[int, int]:
    """Order two side masks so the side with the lowest vertex comes first."""
    if (a & -a) > (b & -b):
        return b, a
    return a, b


def is_induced_biclique(g: Graph, bc: Biclique) -> bool:
    a, b = bc.masks()
    if not (g.is_independent_mask(a) and g.is_independent_mask(b)):
        return False
    return g.common_mask(a) & b == b


def is_maximal_biclique(g: Graph, bc: Biclique) -> bool:
    """True iff ``bc`` is induced and no single vertex extends either side."""
    if not is_induced_biclique(g, bc):
        return False
    a, b = bc.masks()
    grow_a = g.indep_mask(a) & g.common_mask(b)
    grow_b = g.indep_mask(b) & g.common_mask(a)
    return not (grow_a | grow_b) & ~(a | b)
