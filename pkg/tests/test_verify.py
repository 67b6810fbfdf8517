import numpy as np
import pytest

from udgraph.embed import Embedding
from udgraph.graphs import Graph, make_complete
from udgraph.verify import ToleranceCliffWarning, induced_udg, verify


def _square_points():
    return np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def test_verify_distance_mode_passes_square():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    report = verify(g, _square_points(), mode="distance", tol=1e-9)
    assert report.passed
    assert report.violations == ()


def test_verify_faithful_catches_nonedge_at_unit():
    # diagonal pairs are fine (sqrt 2), but adding a chord of length 1
    # between non-adjacent vertices must fail faithfully
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])  # (3,0) missing yet at distance 1
    report = verify(g, _square_points(), mode="faithful", tol=1e-9)
    assert not report.passed
    kinds = {v["kind"] for v in report.violations}
    assert kinds == {"nonedge_unit"}
    assert report.violations[0]["pair"] == (0, 3)


def test_verify_catches_stretched_edge():
    g = make_complete(2)
    pts = np.array([[0.0, 0.0], [1.5, 0.0]])
    report = verify(g, pts, mode="distance", tol=1e-9)
    assert not report.passed
    assert report.violations[0]["kind"] == "edge_not_unit"


def test_verify_warns_near_tolerance_cliff():
    g = Graph(2, [])
    pts = np.array([[0.0, 0.0], [1.0 + 2e-9, 0.0]])
    with pytest.warns(ToleranceCliffWarning):
        report = verify(g, pts, mode="faithful", tol=1e-9)
    assert report.passed  # ambiguous, not violating
    assert report.ambiguous == ((0, 1),)


def test_verify_embedding_object_and_size_mismatch():
    g = make_complete(2)
    emb = Embedding(2, np.array([[0.0, 0.0], [1.0, 0.0]]))
    assert verify(g, emb, mode="distance").passed
    with pytest.raises(ValueError):
        verify(make_complete(3), emb)


def test_induced_udg_recovers_square_cycle():
    got = induced_udg(_square_points(), tol=1e-9)
    assert got == Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_induced_udg_rejects_coincident_points():
    with pytest.raises(ValueError):
        induced_udg(np.zeros((2, 2)))


def test_report_to_dict_shape():
    g = make_complete(2)
    report = verify(g, np.array([[0.0, 0.0], [2.0, 0.0]]), mode="distance")
    d = report.to_dict()
    assert d["passed"] is False
    assert d["mode"] == "distance"
    assert d["violations"][0]["pair"] == [0, 1]
