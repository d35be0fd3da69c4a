"""Random near-bipartite graphs with a known OCT decomposition.

Vertices are laid out as ``L = 0..n_l-1``, ``R = n_l..n_l+n_r-1`` and ``O`` after
that.  Randomness comes from numpy's PCG64 (``numpy.random.default_rng(seed)``)
and is consumed in a fixed order: L–R degrees and neighbour picks, then O–(L∪R)
degrees and picks, then O–O coin flips.  Because the L–R block is drawn first,
two parameter sets that differ only in their OCT part share the same bipartite
part for a given seed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, members, strip_isolates
from .oct import OctDecomposition

OCT_MODES = ("random", "independent", "perfect_matching")


@dataclass(frozen=True)
class GenParams:
    n_l: int
    n_r: int
    n_o: int = 0
    d_lr: float = 0.05
    d_ob: float = 0.05
    d_oo: float = 0.05
    cv_lr: float = 0.5
    cv_ob: float = 0.5
    oct_mode: str = "random"
    seed: int = 0
    prune_isolates: bool = False

    def validate(self) -> None:
        for name in ("n_l", "n_r", "n_o"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        for name in ("d_lr", "d_ob", "d_oo"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        for name in ("cv_lr", "cv_ob"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.oct_mode not in OCT_MODES:
            raise ValueError(f"oct_mode must be one of {OCT_MODES}, got {self.oct_mode!r}")
        if self.oct_mode == "perfect_matching" and self.n_o % 2:
            raise ValueError("perfect_matching needs an even number of OCT vertices")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def n_b(self) -> int:
        return self.n_l + self.n_r

    def as_dict(self) -> dict:
        return asdict(self)


def split_balance(n_b: int, balance: str) -> tuple[int, int]:
    """Split ``n_b`` bipartite vertices by a ratio such as ``"1:10"``.

    >>> split_balance(200, "1:10")
    (18, 182)
    """
    left, right = (int(part) for part in balance.split(":"))
    if left <= 0 or right <= 0:
        raise ValueError(f"bad balance {balance!r}")
    n_l = round(Fraction(n_b * left, left + right))
    return n_l, n_b - n_l


def _degree_edges(rng, sources, targets, density, cv):
    """Give every source a degree, then pick that many distinct targets uniformly."""
    if not len(sources) or not len(targets):
        return []
    mean = density * len(targets)
    if cv > 0 and mean > 0:
        raw = rng.normal(mean, cv * mean, size=len(sources))
    else:
        raw = np.full(len(sources), mean)
    degrees = np.clip(np.rint(raw), 0, len(targets)).astype(np.int64)
    targets = np.asarray(targets)
    edges = []
    for s, k in zip(sources, degrees):
        if k:
            for t in rng.choice(len(targets), size=int(k), replace=False):
                edges.append((int(s), int(targets[t])))
    return edges


def generate(p: GenParams) -> tuple[Graph, OctDecomposition]:
    p.validate()
    rng = np.random.default_rng(p.seed)
    l = list(range(p.n_l))
    r = list(range(p.n_l, p.n_l + p.n_r))
    o = list(range(p.n_l + p.n_r, p.n_l + p.n_r + p.n_o))
    # the smaller side gets the degrees (L on ties)
    small, large = (l, r) if p.n_l <= p.n_r else (r, l)
    edges = _degree_edges(rng, small, large, p.d_lr, p.cv_lr)
    edges += _degree_edges(rng, o, l + r, p.d_ob, p.cv_ob)
    if p.oct_mode == "random" and len(o) > 1:
        pairs = [(o[i], o[j]) for i in range(len(o)) for j in range(i + 1, len(o))]
        flips = rng.random(len(pairs))
        edges += [pair for pair, f in zip(pairs, flips) if f < p.d_oo]
    elif p.oct_mode == "perfect_matching":
        edges += [(o[i], o[i + 1]) for i in range(0, len(o), 2)]
    g = Graph(len(l) + len(r) + len(o), edges)
    d = OctDecomposition(l, r, o)
    if p.prune_isolates:
        g, id_map = strip_isolates(g)
        index = {old: new for new, old in enumerate(id_map)}
        d = OctDecomposition(
            (index[v] for v in l if v in index),
            (index[v] for v in r if v in index),
            (index[v] for v in o if v in index),
        )
    return g, d


def stats(g: Graph, d: OctDecomposition) -> dict[str, float]:
    """Empirical densities and the degree cv of the smaller bipartite side."""
    l, r, o = d.masks()
    n_l, n_r, n_o = len(d.l), len(d.r), len(d.o)
    lr = l | r

    def count(src: int, dst: int) -> int:
        return sum(bin(g.masks[v] & dst).count("1") for v in members(src))

    e_lr = count(l, r)
    e_ob = count(o, lr)
    e_oo = count(o, o) // 2
    small, other = (l, r) if n_l <= n_r else (r, l)
    degrees = np.array([bin(g.masks[v] & other).count("1") for v in members(small)], dtype=float)
    mean = degrees.mean() if degrees.size else 0.0
    return {
        "d_lr": e_lr / (n_l * n_r) if n_l and n_r else 0.0,
        "d_ob": e_ob / (n_o * (n_l + n_r)) if n_o and (n_l + n_r) else 0.0,
        "d_oo": e_oo / (n_o * (n_o - 1) / 2) if n_o > 1 else 0.0,
        "cv_lr": float(degrees.std() / mean) if mean > 0 else 0.0,
        "m": g.m,
    }
