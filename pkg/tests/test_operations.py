"""Structural checks for every graph transformation."""

import random

import pytest

from alphapoly import (
    CoalescenceSpec,
    Graph,
    GraphParameterError,
    attach_pendants,
    charpoly_direct,
    coalesce,
    complement,
    disjoint_union,
    is_regular,
    line_graph,
    q_graph,
    r_graph,
    subdivision,
    total_graph,
)
from alphapoly.corpus import isomorphic, random_graph
from conftest import fam


def test_disjoint_union_counts():
    assert disjoint_union(fam("complete", 1), fam("complete", 1)) == Graph(2, [])
    u = disjoint_union(fam("complete", 3), fam("complete", 2))
    assert (u.n, u.m) == (5, 4)


def test_union_charpoly_multiplies():
    g, h = fam("cycle", 4), fam("star", 3)
    assert charpoly_direct(disjoint_union(g, h)) == \
        charpoly_direct(g) * charpoly_direct(h)


def test_coalesce_structure():
    p3 = coalesce(CoalescenceSpec(fam("complete", 2), fam("complete", 2), 0, 0))
    assert isomorphic(p3, fam("path", 3))
    # merged vertex is vertex 0 and carries both degrees
    assert p3.degree(0) == 2

    p5 = coalesce(CoalescenceSpec(fam("star", 3), fam("star", 3), 1, 1))
    assert (p5.n, p5.m) == (5, 4)
    assert isomorphic(p5, fam("path", 5))

    pine = coalesce(CoalescenceSpec(fam("star", 4), fam("complete", 5), 0, 2))
    assert isomorphic(pine, fam("pineapple", 5, 3))


def test_coalesce_rejects_bad_vertices():
    with pytest.raises(GraphParameterError):
        CoalescenceSpec(fam("complete", 2), fam("complete", 2), 5, 0)


def test_line_graph_examples():
    octa = line_graph(fam("complete", 4))
    assert (octa.n, is_regular(octa)) == (6, 4)
    assert isomorphic(octa, total_graph(fam("complete", 3)))

    assert isomorphic(line_graph(fam("path", 3)), fam("complete", 2))

    prism = line_graph(fam("complete_bipartite", 2, 3))
    assert (prism.n, prism.m, is_regular(prism)) == (6, 9, 3)

    with pytest.raises(GraphParameterError):
        line_graph(Graph(3, []))


def test_line_graph_regular_degree():
    for text, r in (("cycle:6", 2), ("complete:5", 4), ("petersen", 3)):
        from alphapoly import FamilySpec, family_generate
        g = family_generate(FamilySpec.parse(text))
        assert is_regular(line_graph(g)) == 2 * r - 2
        assert line_graph(g).n == g.m


def test_complement_examples(petersen):
    assert complement(fam("complete", 4)) == Graph(4, [])
    c4c = complement(fam("cycle", 4))
    assert sorted(c4c.degrees) == [1, 1, 1, 1] and c4c.m == 2
    lk5c = complement(line_graph(fam("complete", 5)))
    assert isomorphic(lk5c, petersen)
    assert charpoly_direct(lk5c) == charpoly_direct(petersen)


def test_complement_involution():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 9), rng)
        assert complement(complement(g)) == g


def test_subdivision_examples():
    assert isomorphic(subdivision(fam("complete", 3)), fam("cycle", 6))
    assert isomorphic(subdivision(fam("complete", 2)), fam("path", 3))
    s = subdivision(fam("complete", 4))
    assert (s.n, s.m) == (4 + 6, 12)
    # originals keep identifiers, edge vertices appended
    assert s.degree(0) == 3 and all(s.degree(v) == 2 for v in range(4, 10))


def test_subdivision_bipartite_for_regular():
    from alphapoly import is_semiregular_bipartite
    assert is_semiregular_bipartite(subdivision(fam("complete", 4))) == (6, 4, 2, 3)


def test_r_graph_examples():
    assert r_graph(fam("complete", 2)) == fam("complete", 3)
    rk3 = r_graph(fam("complete", 3))
    assert (rk3.n, rk3.m) == (6, 9)
    assert sorted(rk3.degrees, reverse=True) == [4, 4, 4, 2, 2, 2]


def test_q_graph_examples():
    assert isomorphic(q_graph(fam("complete", 2)), fam("path", 3))
    qk3 = q_graph(fam("complete", 3))
    assert (qk3.n, qk3.m) == (6, 9)


def test_q_graph_edge_block_is_line_graph():
    for text in ("complete:4", "cycle:5", "star:4"):
        from alphapoly import FamilySpec, family_generate
        g = family_generate(FamilySpec.parse(text))
        q = q_graph(g)
        lg = line_graph(g)
        block = {(u - g.n, v - g.n) for u, v in q.edges if u >= g.n and v >= g.n}
        assert block == set(lg.edges)


def test_total_graph_examples():
    assert total_graph(fam("complete", 2)) == fam("complete", 3)
    tk3 = total_graph(fam("complete", 3))
    assert (tk3.n, is_regular(tk3)) == (6, 4)
    assert isomorphic(tk3, line_graph(fam("complete", 4)))


def test_total_graph_regular_degree():
    for text in ("cycle:5", "complete:4"):
        from alphapoly import FamilySpec, family_generate
        g = family_generate(FamilySpec.parse(text))
        t = total_graph(g)
        assert is_regular(t) == 2 * is_regular(g)
        assert t.n == g.n + g.m


def test_attach_pendants():
    assert attach_pendants(fam("complete", 1), [0]) == fam("complete", 2)
    fig = attach_pendants(fam("complete", 6), [0, 2, 4, 5])
    assert fig.n == 10
    assert sorted(fig.degrees, reverse=True) == [6, 6, 6, 6, 5, 5, 1, 1, 1, 1]
    spider = attach_pendants(fam("star", 4), [1, 2, 3])
    assert sorted(spider.degrees, reverse=True) == [3, 2, 2, 2, 1, 1, 1]
    with pytest.raises(GraphParameterError):
        attach_pendants(fam("complete", 3), [0, 0])
    with pytest.raises(GraphParameterError):
        attach_pendants(fam("complete", 3), [7])
