"""Check realizations against graphs.

The induced unit-distance graph of a point set has an edge wherever the
distance is within tol of 1. Faithful verification demands that induced graph
equal the claimed graph; distance verification only checks the claimed edges.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .geometry import TOL_GEOM, as_points, pairwise_distances
from .graphs import Graph

MODES = ("faithful", "distance")


class ToleranceCliffWarning(UserWarning):
    """A pair sits just outside the unit-distance band; the verdict would flip
    under a small tolerance change."""


def induced_udg(points, tol: float = TOL_GEOM) -> Graph:
    """Graph on the point indices whose edges are the unit-distance pairs.

    Coincident points (pairwise distance <= tol) raise ValueError. Pairs whose
    deviation from unit length falls in the ambiguity band (tol, 3*tol] emit a
    ToleranceCliffWarning.
    """
    pts = as_points(points)
    n = pts.shape[0]
    dist = pairwise_distances(pts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i, j] <= tol:
                raise ValueError(f"points {i} and {j} coincide (distance {dist[i, j]:.3e})")
            dev = abs(dist[i, j] - 1.0)
            if dev <= tol:
                edges.append((i, j))
            elif dev <= 3.0 * tol:
                warnings.warn(
                    f"pair ({i}, {j}) at distance {dist[i, j]!r} is within "
                    f"(tol, 3*tol] of unit length",
                    ToleranceCliffWarning,
                    stacklevel=2,
                )
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class Report:
    passed: bool
    mode: str
    tol: float
    violations: tuple = ()
    ambiguous: tuple = ()

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "mode": self.mode,
            "tol": self.tol,
            "violations": [
                {"pair": list(v["pair"]), "distance": v["distance"], "kind": v["kind"]}
                for v in self.violations
            ],
            "ambiguous_pairs": [list(p) for p in self.ambiguous],
        }


def verify(g: Graph, embedding, mode: str = "faithful", tol: float = TOL_GEOM) -> Report:
    """Check an embedding of g. Returns a Report; raises on malformed input.

    mode "distance": every edge must have length within tol of 1.
    mode "faithful": additionally no non-edge may, and points must be distinct.
    Violations carry the offending pair, its distance, and a kind tag
    ("edge_not_unit" or "nonedge_unit").
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    pts = as_points(getattr(embedding, "points", embedding))
    if pts.shape[0] != g.n:
        raise ValueError(f"embedding has {pts.shape[0]} points for a {g.n}-vertex graph")
    dist = pairwise_distances(pts)
    violations = []
    ambiguous = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            d = float(dist[i, j])
            dev = abs(d - 1.0)
            is_edge = g.has_edge(i, j)
            if is_edge and dev > tol:
                violations.append({"pair": (i, j), "distance": d, "kind": "edge_not_unit"})
            elif mode == "faithful" and not is_edge:
                if d <= tol:
                    violations.append({"pair": (i, j), "distance": d, "kind": "coincident"})
                elif dev <= tol:
                    violations.append({"pair": (i, j), "distance": d, "kind": "nonedge_unit"})
                elif dev <= 3.0 * tol:
                    ambiguous.append((i, j))
    if ambiguous:
        warnings.warn(
            f"{len(ambiguous)} pair(s) within (tol, 3*tol] of unit length",
            ToleranceCliffWarning,
            stacklevel=2,
        )
    return Report(
        passed=not violations,
        mode=mode,
        tol=tol,
        violations=tuple(violations),
        ambiguous=tuple(ambiguous),
    )
