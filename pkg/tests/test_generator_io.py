import io

import pytest

from bicliques.fileio import (
    FormatError,
    format_graph,
    parse_graph,
    parse_vertices,
    write_bicliques,
)
from bicliques.generator import GenParams, generate, split_balance, stats
from bicliques.graph import Biclique, Graph
from bicliques.oct import verify


def test_zero_density_gives_no_edges():
    g, _ = generate(GenParams(5, 6, 4, d_lr=0, d_ob=0, d_oo=0, seed=3))
    assert g.m == 0 and g.n == 15


def test_full_density_k22():
    g, d = generate(GenParams(2, 2, 0, d_lr=1.0, cv_lr=0))
    assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert stats(g, d)["d_lr"] == 1.0


def test_perfect_matching_mode():
    g, d = generate(GenParams(10, 10, 4, oct_mode="perfect_matching", d_oo=0.0, seed=1))
    o = sorted(d.o)
    inside = [(u, v) for u, v in g.edges() if u in d.o and v in d.o]
    assert sorted(inside) == [(o[0], o[1]), (o[2], o[3])]


def test_independent_mode():
    g, d = generate(GenParams(10, 10, 6, d_oo=0.9, oct_mode="independent", seed=1))
    assert not any(u in d.o and v in d.o for u, v in g.edges())


def test_empty_stats():
    g, d = generate(GenParams(3, 3, 2, d_lr=0, d_ob=0, d_oo=0))
    s = stats(g, d)
    assert s["d_lr"] == s["d_ob"] == s["d_oo"] == 0.0


def test_same_seed_same_graph():
    p = GenParams(20, 40, 5, d_lr=0.2, seed=99)
    assert generate(p)[0].edges() == generate(p)[0].edges()
    assert generate(p)[0].edges() != generate(GenParams(20, 40, 5, d_lr=0.2, seed=100))[0].edges()


def test_oct_part_does_not_disturb_bipartite_part():
    a, _ = generate(GenParams(15, 15, 0, d_lr=0.2, seed=4))
    b, _ = generate(GenParams(15, 15, 3, d_lr=0.2, seed=4))
    assert a.edges() == [(u, v) for u, v in b.edges() if u < 30 and v < 30]


def test_decompositions_verify():
    for seed in range(20):
        for mode in ("random", "independent", "perfect_matching"):
            g, d = generate(GenParams(8, 12, 4, d_lr=0.3, d_ob=0.3, d_oo=0.5, oct_mode=mode, seed=seed))
            assert verify(g, d)


def test_prune_isolates():
    g, d = generate(GenParams(10, 30, 2, d_lr=0.05, seed=2, prune_isolates=True))
    assert all(g.degree(v) for v in range(g.n))
    assert verify(g, d)


@pytest.mark.parametrize(
    "kwargs",
    [dict(n_l=-1, n_r=2), dict(n_l=1, n_r=1, d_lr=1.5), dict(n_l=1, n_r=1, cv_lr=-1),
     dict(n_l=1, n_r=1, n_o=3, oct_mode="perfect_matching"), dict(n_l=1, n_r=1, oct_mode="ring")],
)
def test_bad_params(kwargs):
    with pytest.raises(ValueError):
        generate(GenParams(**kwargs))


def test_split_balance():
    assert split_balance(200, "1:10") == (18, 182)
    assert split_balance(60, "1:1") == (30, 30)
    with pytest.raises(ValueError):
        split_balance(10, "0:1")


def test_graph_round_trip():
    g, _ = generate(GenParams(10, 10, 3, d_lr=0.3, seed=8))
    assert parse_graph(format_graph(g)) == g


def test_parse_graph_comments_and_errors():
    g = parse_graph("# header comment\n3 2\n0 1  # edge\n1 2\n")
    assert g == Graph(3, [(0, 1), (1, 2)])
    for bad in ["", "3\n", "2 1\n0 0\n", "2 2\n0 1\n1 0\n", "2 1\n0 5\n", "2 2\n0 1\n", "x y\n"]:
        with pytest.raises(FormatError):
            parse_graph(bad)


def test_parse_vertices():
    assert parse_vertices("3\n# c\n1\n") == [3, 1]
    with pytest.raises(FormatError):
        parse_vertices("1\n1\n")
    with pytest.raises(FormatError):
        parse_vertices("a\n")


def test_write_bicliques():
    out = io.StringIO()
    assert write_bicliques([Biclique((5,), (1, 3))], out) == 1
    assert out.getvalue() == "1 3 | 5\n"
