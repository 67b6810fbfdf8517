"""Constructive realizations.

Three constructions live here:

* embed_colorable: a proper coloring with k classes puts each class on its own
  circle of radius 1/sqrt(2); the circles share a center, are pairwise
  orthogonal, and span R^{2k}. Any two points on different circles are at
  distance exactly 1, so every cross-class pair (in particular every edge) is
  unit. Distance-graph semantics.
* realize_hsystem: incremental realization on spheres of a system of affine
  exclusion conditions, growing the sphere dimension only when a condition is
  too big to satisfy in general position.
* embed_bipartite_faithful: faithful realization in R^d of a bipartite graph
  whose A-side degrees are at most d. The B side is sampled as a small,
  nearly flat cluster in general position; every A vertex then sits on the
  complementary sphere of its neighborhood's circumsphere, so its neighbor
  distances are exactly 1 while rejection sampling keeps every non-edge away
  from unit length by a real margin.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    TOL_RANK,
    affine_rank,
    as_points,
    circumsphere,
    complementary_sphere,
    minimal_sphere,
    pairwise_distances,
    sphere_point,
)
from .graphs import Graph, bipartition_of
from .verify import verify

TOL_CONSTRUCT = 1e-7  # edge-length tolerance the constructions are held to
MARGIN_NONEDGE = 1e-4  # guaranteed non-edge clearance from unit length
TOL_DISTINCT = 1e-6  # minimum pairwise separation in a valid embedding
B_DIAMETER = 0.1  # diameter of the sampled B-side cluster

_SAMPLE_MARGIN = 2.5e-4  # rejection threshold, headroom over MARGIN_NONEDGE
_WORKING_SEP = 1e-4  # working pairwise separation during placement


class PreconditionError(ValueError):
    """Input violates a documented precondition; carries witness data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class RealizationError(RuntimeError):
    """All retries exhausted without a numerically valid realization."""


@dataclass(frozen=True, eq=False)
class Embedding:
    dim: int
    points: np.ndarray

    def __post_init__(self):
        pts = as_points(self.points)
        if pts.shape[1] != self.dim:
            raise ValueError(f"points are {pts.shape[1]}-dimensional, dim says {self.dim}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        if pts.shape[0] >= 2:
            dist = pairwise_distances(pts)
            off = dist + np.eye(pts.shape[0]) * 10.0
            if off.min() <= TOL_DISTINCT:
                i, j = divmod(int(off.argmin()), pts.shape[0])
                raise ValueError(f"points {i} and {j} are not distinct (distance {off.min():.3e})")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def to_json(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(format(float(v), ".17g") for v in row) + "]"
            for row in self.points
        )
        return '{"dim": %d, "points": [%s]}' % (self.dim, rows)


def embedding_from_json(text: str) -> Embedding:
    d = json.loads(text)
    return Embedding(dim=int(d["dim"]), points=np.asarray(d["points"], dtype=float))


def _check_coloring(g: Graph, coloring) -> list:
    classes = [sorted(int(v) for v in cls) for cls in coloring]
    seen = [v for cls in classes for v in cls]
    if sorted(seen) != list(range(g.n)):
        raise PreconditionError("coloring must partition the vertex set", witness=seen)
    cls_of = {}
    for c, cls in enumerate(classes):
        for v in cls:
            cls_of[v] = c
    for u, v in g.edges:
        if cls_of[u] == cls_of[v]:
            raise PreconditionError(
                f"edge ({u}, {v}) inside color class {cls_of[u]}", witness=(u, v)
            )
    return classes


def _circle_points(count: int) -> np.ndarray:
    """`count` angles in [0, pi/2): same-circle chords stay strictly below 1."""
    angles = np.arange(count) * (math.pi / 2.0) / max(count, 1)
    r = 1.0 / math.sqrt(2.0)
    return np.stack([r * np.cos(angles), r * np.sin(angles)], axis=1)


def embed_colorable(g: Graph, coloring=None) -> Embedding:
    """Distance-graph embedding in R^{2k} from a proper k-coloring.

    Class c occupies coordinates (2c, 2c+1) on a circle of radius 1/sqrt(2)
    about the common center; cross-class distances are exactly 1 by
    orthogonality, and within-class angles are confined to a quarter turn so
    no same-class pair is unit. Edges of g are all cross-class, hence unit.
    """
    from .graphs import greedy_coloring

    if coloring is None:
        coloring = greedy_coloring(g)
    classes = _check_coloring(g, coloring)
    k = len(classes)
    if k == 0:
        return Embedding(dim=0, points=np.zeros((0, 0)))
    points = np.zeros((g.n, 2 * k))
    for c, cls in enumerate(classes):
        circ = _circle_points(len(cls))
        for row, v in enumerate(cls):
            points[v, 2 * c : 2 * c + 2] = circ[row]
    return Embedding(dim=2 * k, points=points)


def embed_singleton_coloring(g: Graph, coloring) -> Embedding:
    """Distance-graph embedding in R^{a+2b} for a coloring with a singleton
    classes and b larger classes.

    Larger classes get orthogonal circles as in embed_colorable; each
    singleton sits at height 1/sqrt(2) on its own fresh axis. All supports are
    disjoint, so every cross-class distance is exactly 1.
    """
    classes = _check_coloring(g, coloring)
    big = [cls for cls in classes if len(cls) >= 2]
    single = [cls for cls in classes if len(cls) == 1]
    a, b = len(single), len(big)
    dim = a + 2 * b
    points = np.zeros((g.n, dim))
    for c, cls in enumerate(big):
        circ = _circle_points(len(cls))
        for row, v in enumerate(cls):
            points[v, 2 * c : 2 * c + 2] = circ[row]
    for t, cls in enumerate(single):
        points[cls[0], 2 * b + t] = 1.0 / math.sqrt(2.0)
    return Embedding(dim=dim, points=points)


# ---------------------------------------------------------------------------
# H-systems


@dataclass(frozen=True)
class HSystem:
    """Affine exclusion conditions over a ground set of m points.

    Each condition H demands that every point outside H avoid the affine hull
    of H's points. Conditions are proper subsets, stored sorted by
    nondecreasing size; the count s of full conditions (H = everything, which
    exclude nothing and only matter for bookkeeping) is held separately.
    """

    m: int
    conditions: tuple = ()
    s: int = 0

    def __post_init__(self):
        if self.m < 0 or self.s < 0:
            raise ValueError("m and s must be nonnegative")
        conds = []
        for H in self.conditions:
            h = frozenset(int(i) for i in H)
            if any(not (0 <= i < self.m) for i in h):
                raise ValueError("condition member out of range")
            if len(h) >= self.m:
                raise ValueError("conditions must be proper subsets; count full sets in s")
            conds.append(h)
        conds.sort(key=lambda h: (len(h), sorted(h)))
        object.__setattr__(self, "conditions", tuple(conds))

    @property
    def sizes(self) -> list:
        return [len(h) for h in self.conditions]


@dataclass(frozen=True)
class FlatnessBudget:
    """Rotation schedule for the incremental realization.

    angle(l) = eps * 2^(-l-4) for the 1-based step index l; the angles sum to
    eps/16, comfortably inside the eps/4 budget, so the point cloud stays
    eps-flat throughout.
    """

    eps: float = 0.01

    def angle(self, l: int) -> float:
        return self.eps * 2.0 ** (-l - 4)

    def total(self, steps: int) -> float:
        return sum(self.angle(l) for l in range(1, steps + 1))


def growth_dimension(sizes) -> int:
    """Sphere dimension realize_hsystem will reach for these condition sizes.

    The growth decision depends only on the size sequence: dimension k starts
    at 1 and increments exactly when a condition of size at least k+2 comes
    up (smaller ones are satisfiable in general position without growing).
    """
    k = 1
    for size in sizes:
        if size >= k + 2:
            k += 1
    return k


def _cap_sample(m: int, k: int, spread: float, rng: np.random.Generator) -> np.ndarray:
    """m distinct points on the unit S^k in a cap of chordal diameter <= spread."""
    min_sep = max(spread / (50.0 * max(m, 1)), 10.0 * TOL_DISTINCT)
    for _ in range(64):
        offsets = rng.uniform(-spread / 2.0, spread / 2.0, size=(m, k))
        pts = np.hstack([np.ones((m, 1)), offsets])
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        if m < 2:
            return pts
        dist = pairwise_distances(pts) + np.eye(m) * 10.0
        if dist.min() > min_sep:
            return pts
    raise RealizationError("could not sample distinct cap points")


def _conditions_hold(points: np.ndarray, conditions, upto: int) -> bool:
    m = points.shape[0]
    for H in conditions[:upto]:
        if not H:
            continue
        idx = sorted(H)
        base = affine_rank(points[idx])
        rest = [i for i in range(m) if i not in H]
        for i in rest:
            if affine_rank(np.vstack([points[idx], points[i]])) != base + 1:
                return False
    return True


def realize_hsystem(h: HSystem, budget: FlatnessBudget | None = None, seed: int = 0,
                    max_retries: int = 50):
    """Realize the conditions by m distinct points on a unit sphere S^k.

    Starts on the circle (k = 1) and walks the conditions in nondecreasing
    size order. A condition of size at most k+1 is satisfiable in general
    position, so the whole cloud is resampled as a flat cap and rechecked.
    A larger condition forces k to grow by one: a fresh coordinate is added
    and every point is rotated by angle(l) into it, positively for members of
    the condition and negatively for the rest, which parks the members on a
    hyperplane the others provably avoid. Returns (k, points) with points of
    shape (m, k+1); k never exceeds the subsequence guarantee s+1 of
    lemedge2_guarantee.
    """
    if budget is None:
        budget = FlatnessBudget()
    if h.m == 0:
        return 1, np.zeros((0, 2))
    for attempt in range(max_retries):
        rng = np.random.default_rng([seed, attempt])
        out = _realize_once(h, budget, rng)
        if out is not None:
            return out
    raise RealizationError(
        f"H-system realization failed numerically after {max_retries} attempts"
    )


def _realize_once(h: HSystem, budget: FlatnessBudget, rng: np.random.Generator):
    k = 1
    pts = _cap_sample(h.m, k, budget.eps / 2.0, rng)
    for l, H in enumerate(h.conditions, start=1):
        if len(H) >= k + 2:
            k += 1
            phi = budget.angle(l)
            signs = np.array([1.0 if i in H else -1.0 for i in range(h.m)])
            pts = np.hstack([math.cos(phi) * pts, math.sin(phi) * signs[:, None]])
            if not _conditions_hold(pts, h.conditions, l):
                return None
        else:
            ok = False
            for _ in range(50):
                pts = _cap_sample(h.m, k, budget.eps / 2.0, rng)
                if _conditions_hold(pts, h.conditions, l):
                    ok = True
                    break
            if not ok:
                return None
    return k, pts


# ---------------------------------------------------------------------------
# faithful bipartite construction


def _ball_sample(radius: float, dim: int, rng: np.random.Generator) -> np.ndarray:
    if dim == 0:
        return np.zeros(0)
    g = rng.normal(size=dim)
    norm = np.linalg.norm(g)
    while norm < 1e-12:
        g = rng.normal(size=dim)
        norm = np.linalg.norm(g)
    return (radius * rng.uniform() ** (1.0 / dim)) * g / norm


def _sample_b_cluster(m: int, d: int, rng: np.random.Generator) -> np.ndarray:
    """B-side cluster: diameter <= B_DIAMETER, flattened against a hyperplane."""
    pts = np.zeros((m, d))
    for j in range(m):
        if d == 1:
            pts[j, 0] = rng.uniform(-0.045, 0.045)
        else:
            pts[j, : d - 1] = _ball_sample(0.045, d - 1, rng)
            pts[j, d - 1] = rng.uniform(-0.0045, 0.0045)
    return pts


def _b_cluster_ok(pts: np.ndarray, nbhds: list, d: int) -> bool:
    """Numeric general-position checks on the B cluster.

    (a) every subset of size <= d+1 is affinely independent;
    (b) no d+1 points lie within 1e-3 of a common unit sphere;
    (c) the two-point complementary spheres of any two size-d neighborhoods
        keep all cross distances at least 1e-3 away from 1;
    (d) for size-d neighborhoods B1, the points of S'(B1) stay off the
        circumspheres of all other neighborhoods; smaller B1 are safe because
        S'(B1) has radius near 1 while every S(B2) is cluster-sized.
    """
    from itertools import combinations

    m = pts.shape[0]
    dist = pairwise_distances(pts) + np.eye(m) * 10.0
    if m >= 2 and dist.min() < 1e-3:
        return False
    diam = dist[dist < 5.0].max(initial=0.0)
    if diam > B_DIAMETER:
        return False
    # enclosing radius must stay clear of 1/2 (it is cluster-sized anyway)
    radius_hat = float(np.linalg.norm(pts - pts.mean(axis=0), axis=1).max(initial=0.0))
    if abs(radius_hat - 0.5) < 0.05:
        return False
    for t in range(3, min(d + 1, m) + 1):
        for sub in combinations(range(m), t):
            if affine_rank(pts[list(sub)]) != t - 1:
                return False
    if m >= d + 1:
        for sub in combinations(range(m), d + 1):
            sph = circumsphere(pts[list(sub)])
            if abs(sph.radius - 1.0) < 1e-3:
                return False
    full = sorted({hb for hb in nbhds if len(hb) == d}, key=sorted)
    spheres = {}
    for hb in set(nbhds):
        idx = sorted(hb)
        sph = minimal_sphere(pts[idx]) if idx else None
        if sph is not None and sph.radius > 0.9:
            # near-degenerate neighborhood: circumradius blown up toward 1,
            # complementary sphere would be thin or undefined
            return False
        spheres[hb] = sph
    poles = {}
    for hb in full:
        comp = complementary_sphere(spheres[hb], d)
        u = comp.flat.basis[0]
        poles[hb] = (comp.center + comp.radius * u, comp.center - comp.radius * u)
    for h1, h2 in combinations(full, 2):
        for y1 in poles[h1]:
            for y2 in poles[h2]:
                gap = np.linalg.norm(y1 - y2)
                if abs(gap - 1.0) < 1e-3 or gap < 1e-3:
                    return False
    for h1 in full:
        for h2, sph in spheres.items():
            if h1 == h2 or sph is None or sph.flat.dim == 0:
                continue
            for y in poles[h1]:
                proj = sph.flat.project(y)
                off_flat = np.linalg.norm(y - proj)
                on_flat = abs(np.linalg.norm(proj - sph.center) - sph.radius)
                if math.hypot(off_flat, on_flat) < 1e-3:
                    return False
    return True


def _margins_ok(y: np.ndarray, others: np.ndarray, kind: str) -> bool:
    """kind 'nonedge': distances must avoid 1; both kinds demand separation."""
    if others.shape[0] == 0:
        return True
    dd = np.linalg.norm(others - y, axis=1)
    if dd.min() < _WORKING_SEP:
        return False
    if kind == "nonedge" and np.abs(dd - 1.0).min() < _SAMPLE_MARGIN:
        return False
    return True


def check_bipartite_preconditions(g: Graph, d: int):
    """Return (A, B) sides for the faithful construction, validating degrees.

    A-side degrees must be at most d and no three A vertices of degree
    exactly d may share a neighborhood. If the stored/derived A side fails
    but the swap works, the sides are swapped. Raises PreconditionError with
    witnesses otherwise.
    """
    try:
        a, b = bipartition_of(g)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc

    def violation(side_a):
        deg_bad = [(v, g.degree(v)) for v in side_a if g.degree(v) > d]
        if deg_bad:
            return ("degree", deg_bad)
        groups = {}
        for v in side_a:
            if g.degree(v) == d:
                groups.setdefault(frozenset(g.neighbors(v)), []).append(v)
        twins = [vs for vs in groups.values() if len(vs) >= 3]
        if twins:
            return ("twins", twins)
        return None

    first = violation(a)
    if first is None:
        return a, b
    if g.bipartition_a is None and violation(b) is None:
        return b, a
    kind, witness = first
    if kind == "degree":
        raise PreconditionError(
            f"A-side degrees exceed d={d}: {witness}", witness=witness
        )
    raise PreconditionError(
        f"three or more degree-{d} A vertices share a neighborhood: {witness}",
        witness=witness,
    )


def embed_bipartite_faithful(g: Graph, d: int, seed: int = 0,
                             max_retries: int = 50) -> Embedding:
    """Faithful realization in R^d of a bipartite graph with A-degrees <= d.

    The B side becomes a flat cluster of diameter B_DIAMETER passing the
    general-position checks of _b_cluster_ok. Each A vertex is placed on the
    complementary sphere of its neighborhood's circumsphere, so neighbor
    distances are exactly 1; degree-d vertices get the two antipodal points of
    a zero-dimensional complementary sphere (twins split them by vertex
    order), everyone else is rejection-sampled until every non-edge clears
    unit length by MARGIN_NONEDGE and all points stay distinct. The result is
    verified faithfully at TOL_CONSTRUCT before being returned.
    """
    if d < 2:
        raise PreconditionError("d must be at least 2")
    side_a, side_b = check_bipartite_preconditions(g, d)
    b_index = {v: i for i, v in enumerate(side_b)}
    nbhds = {v: frozenset(b_index[w] for w in g.neighbors(v)) for v in side_a}
    nbhd_list = [nbhds[v] for v in sorted(side_a) if nbhds[v]]

    for attempt in range(max_retries):
        rng = np.random.default_rng([seed, attempt])
        bpts = _sample_b_cluster(len(side_b), d, rng)
        if not _b_cluster_ok(bpts, nbhd_list, d):
            continue
        placed = _place_a_side(g, d, side_a, side_b, nbhds, bpts, rng)
        if placed is None:
            continue
        points = np.zeros((g.n, d))
        for i, v in enumerate(side_b):
            points[v] = bpts[i]
        for v, y in placed.items():
            points[v] = y
        emb = Embedding(dim=d, points=points)
        report = verify(g, emb, mode="faithful", tol=TOL_CONSTRUCT)
        if report.passed and _nonedge_margin(g, points) >= MARGIN_NONEDGE:
            return emb
    raise RealizationError(
        f"faithful embedding failed after {max_retries} attempts (seed {seed})"
    )


def _nonedge_margin(g: Graph, points: np.ndarray) -> float:
    dist = pairwise_distances(points)
    best = math.inf
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j):
                best = min(best, abs(float(dist[i, j]) - 1.0))
    return best


def _place_a_side(g, d, side_a, side_b, nbhds, bpts, rng):
    """Place A vertices: forced degree-d pairs first, then sampled ones."""
    placed: dict = {}
    spheres = {}
    for hb in set(nbhds.values()):
        if hb:
            spheres[hb] = complementary_sphere(minimal_sphere(bpts[sorted(hb)]), d)

    def surroundings(v):
        non_nbr = [i for i in range(len(side_b)) if i not in nbhds[v]]
        rows = [bpts[i] for i in non_nbr] + list(placed.values())
        return np.asarray(rows).reshape(len(rows), d)

    full_groups: dict = {}
    for v in sorted(side_a):
        if len(nbhds[v]) == d:
            full_groups.setdefault(nbhds[v], []).append(v)
    for hb, verts in sorted(full_groups.items(), key=lambda kv: kv[1]):
        comp = spheres[hb]
        u = comp.flat.basis[0]
        candidates = [comp.center + comp.radius * u, comp.center - comp.radius * u]
        if len(verts) == 2:
            assignments = [(verts[0], candidates[0]), (verts[1], candidates[1])]
        else:
            assignments = None
            for cand in candidates:
                if _margins_ok(cand, surroundings(verts[0]), "nonedge"):
                    assignments = [(verts[0], cand)]
                    break
            if assignments is None:
                return None
        for v, y in assignments:
            if not _margins_ok(y, surroundings(v), "nonedge"):
                return None
            placed[v] = y

    for v in sorted(side_a):
        if v in placed:
            continue
        hb = nbhds[v]
        ok = False
        for _ in range(200):
            if hb:
                y = sphere_point(spheres[hb], rng)
            else:
                y = bpts.mean(axis=0) if len(side_b) else np.zeros(d)
                y = y + 3.0 * np.eye(d)[0] + _ball_sample(0.3, d, rng)
            if _margins_ok(y, surroundings(v), "nonedge"):
                placed[v] = y
                ok = True
                break
        if not ok:
            return None
    return placed
