"""Certified dimension bounds for faithful realizability of bipartite graphs.

The lower-bound side is a small rule engine. In any faithful realization,
each full-degree A vertex forces the whole B side onto a unit sphere around
it; s such vertices cut the ambient dimension down by an offset of min(s, 3).
Within a common sphere, an independence chain (three distinct starting
points, then repeated extension by a vertex excluded from a condition that
contains the whole prefix) forces affine rank to grow, which bounds the
sphere dimension from below. These rules are deliberately incomplete;
UNDECIDED is an honest verdict.

The upper-bound side realizes the H-system on a sphere (realize_hsystem),
scales it, and places the A vertices on complementary spheres, producing a
verified witness embedding whenever the numbers cooperate.

With no full-degree vertex (s = 0) there is no common sphere and the chain
rule does not apply to realizations, so the audit never claims
NOT_REALIZABLE in that case: the path on five vertices is faithful on the
integer line yet its H-system would naively suggest a 2-dimensional bound.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .embed import (
    Embedding,
    FlatnessBudget,
    HSystem,
    MARGIN_NONEDGE,
    RealizationError,
    TOL_CONSTRUCT,
    growth_dimension,
    realize_hsystem,
)
from .geometry import complementary_sphere, minimal_sphere, sphere_point
from .graphs import Graph, bipartition_of, graph_to_json
from .verify import verify

_CHAIN_NODE_CAP = 100_000
_PLACE_MARGIN = 2.5e-4
_PLACE_SEP = 1e-4


@dataclass(frozen=True, eq=False)
class AuditReport:
    graph_id: str
    d_queried: int
    verdict: str  # NOT_REALIZABLE | REALIZABLE | UNDECIDED
    k_lower: int
    k_upper: int
    s: int
    rule_chain: tuple
    embedding: Embedding | None = None

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "d_queried": self.d_queried,
            "verdict": self.verdict,
            "k_lower": self.k_lower,
            "k_upper": self.k_upper,
            "s": self.s,
            "rule_chain": [dict(r) for r in self.rule_chain],
            "embedding": None if self.embedding is None else {
                "dim": self.embedding.dim,
                "points": self.embedding.points.tolist(),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def graph_id(g: Graph) -> str:
    digest = hashlib.sha1(graph_to_json(g).encode()).hexdigest()[:10]
    return f"n{g.n}-m{g.m}-{digest}"


def hsystem_of(g: Graph, side: str = "A") -> HSystem:
    """Neighborhood system of one side of a bipartite graph.

    side names the condition side: its vertices' neighborhoods become subsets
    of the other (ground) side, indexed in sorted vertex order. Full
    neighborhoods are counted in s, the rest are the conditions.
    """
    if side not in ("A", "B"):
        raise ValueError("side must be 'A' or 'B'")
    a, b = bipartition_of(g)
    cond_side, ground = (a, b) if side == "A" else (b, a)
    index = {v: i for i, v in enumerate(ground)}
    m = len(ground)
    s = 0
    conditions = []
    for v in cond_side:
        nb = frozenset(index[w] for w in g.neighbors(v))
        if len(nb) == m and m > 0:
            s += 1
        else:
            conditions.append(nb)
    return HSystem(m=m, conditions=tuple(conditions), s=s)


def lemedge_bound(k: int) -> int:
    """Minimum total condition size that can force dimension beyond k:
    C(k+3, 2) - 3."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return math.comb(k + 3, 2) - 3


def lemedge2_guarantee(sizes) -> tuple:
    """Greedy maximal subsequence with |H_{i_j}| >= j+2; returns (s, s+1).

    The system is realizable on S^k for every k >= s+1, so s+1 is the
    guaranteed sphere dimension. Expects sizes nondecreasing.
    """
    sizes = list(sizes)
    if any(sizes[i] > sizes[i + 1] for i in range(len(sizes) - 1)):
        raise ValueError("sizes must be nondecreasing")
    s = 0
    for size in sizes:
        if size >= s + 3:
            s += 1
    return s, s + 1


def edge_sum(h: HSystem) -> int:
    """Sum of |H_i| over all conditions, full ones included; equals the edge
    count of the bipartite graph the system came from."""
    return sum(len(c) for c in h.conditions) + h.s * h.m


def _chain_search(h: HSystem, node_cap: int = _CHAIN_NODE_CAP) -> list:
    """Longest independence chain found within the node budget.

    A chain starts with up to three free elements (three distinct points on
    a sphere are never collinear) and extends by any j outside some condition
    that contains the entire current chain. Extension validity depends only
    on the chain as a set, so the search memoizes on frozensets. The result
    is a valid chain even when the cap truncates the search.
    """
    m = h.m
    if m <= 3:
        return list(range(m))
    conds = [frozenset(c) for c in h.conditions]
    best: list = []
    seen: set = set()
    nodes = 0

    def extend(chain_set: frozenset, order: list):
        nonlocal best, nodes
        if len(order) > len(best):
            best = list(order)
        if len(order) == m or nodes > node_cap:
            return
        for j in range(m):
            if j in chain_set:
                continue
            if not any(chain_set <= c and j not in c for c in conds):
                continue
            grown = chain_set | {j}
            if grown in seen:
                continue
            seen.add(grown)
            nodes += 1
            extend(grown, order + [j])

    for start in combinations(range(m), 3):
        if nodes > node_cap or len(best) == m:
            break
        extend(frozenset(start), list(start))
    return best


def k_lower_bound(h: HSystem) -> int:
    """Certified lower bound on the sphere dimension of any realization."""
    best = 1 if h.m >= 3 else 0
    chain = _chain_search(h)
    if chain:
        best = max(best, len(chain) - 2)
    return best


def _lower_rules(h: HSystem, side: str) -> tuple:
    """(k_lower, rule entries) with the witnesses that produced the bound."""
    rules = []
    best = 0
    if h.m >= 3:
        best = 1
        rules.append({"rule": "R1", "params": {"side": side, "m": h.m}})
    chain = _chain_search(h)
    if len(chain) - 2 > best:
        best = len(chain) - 2
        rules.append({
            "rule": "R2_chain",
            "params": {"side": side, "chain": chain, "length": len(chain)},
        })
    return best, rules


_S_OFFSET = {1: 1, 2: 2}  # s >= 3 gives offset 3


def _required_dimension(s: int, k_lower: int):
    """Certified minimum ambient dimension, or None when s = 0 (no common
    sphere, so the chain machinery says nothing about realizations)."""
    if s == 0:
        return None
    return k_lower + _S_OFFSET.get(s, 3)


# ---------------------------------------------------------------------------
# upper side: witness construction


def _pad(points: np.ndarray, dim: int) -> np.ndarray:
    extra = dim - points.shape[1]
    if extra <= 0:
        return points
    return np.hstack([points, np.zeros((points.shape[0], extra))])


def _audit_margins(y, others, margin=_PLACE_MARGIN, sep=_PLACE_SEP) -> bool:
    if len(others) == 0:
        return True
    arr = np.asarray(others)
    dd = np.linalg.norm(arr - y, axis=1)
    return bool(dd.min() >= sep and np.abs(dd - 1.0).min() >= margin)


def _place_near_sphere(sph, rng, surroundings, tries=200):
    for _ in range(tries):
        y = sphere_point(sph, rng)
        if _audit_margins(y, surroundings):
            return y
    return None


def _construct_side(g: Graph, d_query: int, cond_side, ground, h: HSystem,
                    seed: int):
    """Witness embedding via H-system realization plus sphere placement.

    Returns (embedding at dim d_query, params dict) or None. The B side is
    the realized H-system scaled by r. With exactly one full-degree vertex
    the sphere stays at radius 1 so that vertex can sit at the center;
    otherwise r = 0.3, which fattens every complementary sphere (radius
    sqrt(1-r^2) instead of near zero) and, for s >= 2, splits the full-degree
    centers off the sphere onto fresh axes. Every other A vertex goes to the
    complementary sphere of its neighborhood's minimal sphere.
    """
    s = h.s
    extra = 0 if s <= 1 else (1 if s == 2 else 2)
    k = growth_dimension(h.sizes)
    d_up = k + 1 + extra
    if d_up > d_query:
        return None
    r = 1.0 if s == 1 else 0.3
    index = {v: i for i, v in enumerate(ground)}
    nbhds = {v: frozenset(index[w] for w in g.neighbors(v)) for v in cond_side}

    for attempt in range(20):
        try:
            k_alg, unit_pts = realize_hsystem(
                h, FlatnessBudget(eps=0.2), seed=seed * 1009 + attempt)
        except RealizationError:
            continue
        if k_alg != k:
            continue
        rng = np.random.default_rng([seed, attempt, 77])
        bpts = _pad(r * unit_pts, d_up)
        placed = _place_audit(g, cond_side, nbhds, bpts, d_up, rng)
        if placed is None:
            continue
        points = np.zeros((g.n, d_up))
        for v, i in index.items():
            points[v] = bpts[i]
        for v, y in placed.items():
            points[v] = y
        try:
            emb = Embedding(dim=d_query, points=_pad(points, d_query))
        except ValueError:
            continue
        report = verify(g, emb, mode="faithful", tol=TOL_CONSTRUCT)
        if report.passed and _min_nonedge_margin(g, emb.points) >= MARGIN_NONEDGE:
            return emb, {"k": k_alg, "s": s, "dim_constructed": d_up, "r": r}
    return None


def _min_nonedge_margin(g: Graph, points: np.ndarray) -> float:
    best = math.inf
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j):
                dev = abs(float(np.linalg.norm(points[i] - points[j])) - 1.0)
                best = min(best, dev)
    return best


def _place_audit(g, cond_side, nbhds, bpts, d_up, rng):
    placed: dict = {}
    m = bpts.shape[0]

    def surroundings(v):
        rows = [bpts[i] for i in range(m) if i not in nbhds[v]]
        rows.extend(placed.values())
        return rows

    groups: dict = {}
    for v in sorted(cond_side):
        groups.setdefault(nbhds[v], []).append(v)

    forced = []
    sampled = []
    for nb, verts in sorted(groups.items(), key=lambda kv: kv[1]):
        if not nb:
            sampled.extend((v, None) for v in verts)
            continue
        ms = minimal_sphere(bpts[sorted(nb)])
        if ms.radius >= 1.0 - 1e-9:
            # the neighborhood spans the whole unit sphere; the center is the
            # only point at distance 1 from all of it
            if len(verts) > 1:
                return None
            forced.append((verts[0], [ms.center]))
            continue
        comp = complementary_sphere(ms, d_up)
        if comp.dim == 0:
            u = comp.flat.basis[0]
            poles = [comp.center + comp.radius * u, comp.center - comp.radius * u]
            if len(verts) > 2:
                return None
            if len(verts) == 2:
                forced.append((verts[0], [poles[0]]))
                forced.append((verts[1], [poles[1]]))
            else:
                forced.append((verts[0], poles))
        else:
            sampled.extend((v, comp) for v in verts)

    for v, candidates in forced:
        chosen = None
        for y in candidates:
            if _audit_margins(y, surroundings(v)):
                chosen = y
                break
        if chosen is None:
            return None
        placed[v] = chosen

    for v, comp in sorted(sampled):
        if comp is None:
            center = bpts.mean(axis=0) if m else np.zeros(d_up)
            y = None
            for _ in range(200):
                cand = center + 3.0 * np.eye(d_up)[0] + 0.3 * rng.normal(size=d_up)
                if _audit_margins(cand, surroundings(v)):
                    y = cand
                    break
        else:
            y = _place_near_sphere(comp, rng, surroundings(v))
        if y is None:
            return None
        placed[v] = y
    return placed


def faithful_dim_audit(g: Graph, d: int) -> AuditReport:
    """Audit faithful realizability of a bipartite graph in R^d.

    NOT_REALIZABLE comes with a rule chain proving d is below the certified
    requirement; REALIZABLE comes with a verified witness embedding padded to
    dimension d; UNDECIDED is returned whenever the bounds do not meet.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    a, b = bipartition_of(g)
    gid = graph_id(g)

    sides = {}
    for side, (cond, ground) in (("A", (a, b)), ("B", (b, a))):
        h = hsystem_of(g, side=side)
        k_low, rules = _lower_rules(h, side)
        req = _required_dimension(h.s, k_low)
        sides[side] = {
            "h": h, "k_lower": k_low, "rules": rules, "required": req,
            "cond": cond, "ground": ground,
        }

    lead = max(
        ("A", "B"),
        key=lambda nm: (-1 if sides[nm]["required"] is None
                        else sides[nm]["required"]),
    )
    required = sides[lead]["required"]

    if required is not None and d < required:
        info = sides[lead]
        chain = list(info["rules"])
        chain.append({
            "rule": "s_offset",
            "params": {"side": lead, "s": info["h"].s,
                       "offset": required - info["k_lower"],
                       "required_d": required},
        })
        k_up = lemedge2_guarantee(info["h"].sizes)[1]
        return AuditReport(
            graph_id=gid, d_queried=d, verdict="NOT_REALIZABLE",
            k_lower=info["k_lower"], k_upper=k_up, s=info["h"].s,
            rule_chain=tuple(chain),
        )

    for side in ("A", "B"):
        info = sides[side]
        out = _construct_side(g, d, info["cond"], info["ground"], info["h"],
                              seed=(0 if side == "A" else 1))
        if out is not None:
            emb, params = out
            chain = list(info["rules"])
            chain.append({"rule": "construction",
                          "params": {"side": side, **params}})
            return AuditReport(
                graph_id=gid, d_queried=d, verdict="REALIZABLE",
                k_lower=info["k_lower"], k_upper=params["k"], s=info["h"].s,
                rule_chain=tuple(chain), embedding=emb,
            )

    info = sides[lead]
    chain = list(info["rules"])
    if required is not None:
        chain.append({
            "rule": "s_offset",
            "params": {"side": lead, "s": info["h"].s,
                       "offset": required - info["k_lower"],
                       "required_d": required},
        })
    k_up = lemedge2_guarantee(info["h"].sizes)[1]
    return AuditReport(
        graph_id=gid, d_queried=d, verdict="UNDECIDED",
        k_lower=info["k_lower"], k_upper=k_up, s=info["h"].s,
        rule_chain=tuple(chain),
    )
