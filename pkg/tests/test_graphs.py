import json
import math

import pytest

from udgraph.graphs import (
    Graph,
    bipartition_of,
    exact_chromatic_small,
    exact_coloring,
    girth,
    graph_from_json,
    graph_to_json,
    greedy_coloring,
    make_complete,
    make_complete_multipartite,
    make_kdoubleprime,
    make_kprime,
    make_petersen,
    make_remark_graph,
)


def test_complete_graph_edge_count():
    for n in range(1, 7):
        assert make_complete(n).m == n * (n - 1) // 2


def test_multipartite_structure():
    g = make_complete_multipartite([3, 3])
    assert g.n == 6 and g.m == 9
    assert not g.has_edge(0, 1)  # same part
    assert g.has_edge(0, 3)


def test_petersen_shape():
    g = make_petersen()
    assert g.n == 10 and g.m == 15
    degrees = [len(g.neighbors(v)) for v in range(10)]
    assert degrees == [3] * 10
    assert girth(g) == 5
    assert exact_chromatic_small(g) == 3


def test_kprime_family():
    # d ground vertices; three of the other side see all of them, the rest
    # miss exactly one
    for d in (3, 4, 5, 6):
        g = make_kprime(d)
        assert g.n == 2 * d
        full = sum(1 for v in range(d) if len(g.neighbors(v)) == d)
        assert full == 3


def test_kprime_rejects_small():
    with pytest.raises(ValueError):
        make_kprime(2)


def test_edge_count_families():
    for d in range(4, 11):
        assert make_kdoubleprime(d).m == math.comb(d + 3, 2) - 6
        assert make_remark_graph(d).m == math.comb(d + 3, 2)


def test_colorings_are_proper():
    for g in (make_petersen(), make_complete(5), make_kprime(4)):
        for classes in (greedy_coloring(g), exact_coloring(g)):
            seen = sorted(v for cls in classes for v in cls)
            assert seen == list(range(g.n))
            for cls in classes:
                for i, u in enumerate(cls):
                    for v in cls[i + 1:]:
                        assert not g.has_edge(u, v)


def test_exact_coloring_matches_chromatic_number():
    g = make_petersen()
    assert len(exact_coloring(g)) == exact_chromatic_small(g) == 3
    assert len(exact_coloring(make_complete(4))) == 4


def test_bipartition():
    g = make_complete_multipartite([3, 3])
    a, b = bipartition_of(g)
    assert sorted(a) + sorted(b) == list(range(6)) or sorted(b) + sorted(a) == list(range(6))
    with pytest.raises(ValueError):
        bipartition_of(make_complete(3))


def test_json_roundtrip():
    g = make_kprime(4)
    text = graph_to_json(g)
    back = graph_from_json(text)
    assert back == g
    doc = json.loads(text)
    assert doc["n"] == g.n
    assert all(u < v for u, v in doc["edges"])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1, [])


def test_girth_edge_cases():
    assert girth(Graph(4, [(0, 1), (1, 2), (2, 3)])) == math.inf  # forest
    assert girth(make_complete(3)) == 3
    assert girth(make_complete_multipartite([2, 2])) == 4
