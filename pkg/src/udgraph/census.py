"""Exhaustive small-n censuses of realizable graphs and counting bounds.

Walks every labelled graph on n vertices (n <= 5, at most 1024 graphs),
classifies each as realizable or presumed-not under the faithful or the
plain distance semantics, and assembles the counts into a report. The
classifier is exact on the line (a graph embeds in R^1 iff it is a
disjoint union of paths) and solver-backed in higher dimension, where a
failed search is evidence but never proof; the method tag on every entry
keeps that distinction explicit.

Also provides the zero-pattern counting bound C(n(n-1), nd) on the number
of faithfully realizable graphs, and two Ramsey-style calculators built on
top of the census machinery.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations

from .graphs import Graph
from .solver import SolverConfig, solve_distance, solve_faithful

_MAX_CENSUS_N = 5

STATUS_REALIZABLE = "REALIZABLE"
STATUS_PRESUMED_NOT = "PRESUMED_NOT"

METHOD_EXACT = "EXACT_ORACLE"
METHOD_FOUND = "SOLVER_FOUND"
METHOD_EXHAUSTED = "SOLVER_EXHAUSTED"


def zero_pattern_bound(n: int, d: int) -> int:
    """Upper bound C(n(n-1), nd) on the number of faithful distance graphs.

    The bound counts sign patterns of the n(n-1) polynomials
    |x_i - x_j|^2 - 1 in the nd coordinates, so it needs nd strictly below
    n(n-1) (and n >= 2d) to say anything; out-of-range inputs are rejected
    with the failing inequality, not computed.
    """
    if n < 2 * d:
        raise ValueError(f"zero-pattern bound needs n >= 2d, got n={n}, d={d}")
    if n * d >= n * (n - 1):
        raise ValueError(
            "zero-pattern bound needs nd < n(n-1), got "
            f"nd={n * d} >= n(n-1)={n * (n - 1)}"
        )
    return math.comb(n * (n - 1), n * d)


def linear_forest_oracle(g: Graph) -> bool:
    """Exact realizability test on the line.

    A graph embeds in R^1 (faithfully or not: the two notions coincide
    there) iff every component is a path: a vertex on the line has only
    the two unit slots x-1 and x+1, and a cycle would force its rightmost
    vertex's two neighbours onto the same slot.
    """
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nb) > 2 for nb in adj):
        return False
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        verts = 0
        degsum = 0
        while stack:
            u = stack.pop()
            verts += 1
            degsum += len(adj[u])
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if degsum // 2 >= verts:  # component has a cycle
            return False
    return True


def is_krt_obstructed(g: Graph, d: int) -> bool:
    """Check for a complete multipartite K_{3,...,3} with d//2 + 1 parts.

    Containing one as a subgraph rules out any distance realization in
    R^d. With a single part there is nothing to check (no cross edges),
    so the test only fires for d >= 2.
    """
    parts = d // 2 + 1
    if parts < 2 or 3 * parts > g.n:
        return False
    adjacency = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    def extend(chosen: list, pool: list) -> bool:
        if len(chosen) == parts:
            return True
        for triple in combinations(pool, 3):
            tset = set(triple)
            if all(all(x in adjacency[y] for x in tset) for part in chosen for y in part):
                rest = [v for v in pool if v not in tset]
                if extend(chosen + [tset], rest):
                    return True
        return False

    return extend([], list(range(g.n)))


def _pairs(n: int) -> tuple:
    return tuple(combinations(range(n), 2))


def _graph_of_mask(mask: int, n: int) -> Graph:
    pairs = _pairs(n)
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return Graph(n, edges)


def _canonical_mask(mask: int, n: int) -> int:
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    best = mask
    for perm in permutations(range(n)):
        relabeled = 0
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                a, b = perm[u], perm[v]
                relabeled |= 1 << index[(a, b) if a < b else (b, a)]
        if relabeled < best:
            best = relabeled
    return best


def _classify_rep(mask: int, n: int, d: int, semantics: str, cfg: SolverConfig):
    """Classify one representative graph; returns (status, method, residual)."""
    g = _graph_of_mask(mask, n)
    if semantics == "distance" and is_krt_obstructed(g, d):
        return STATUS_PRESUMED_NOT, METHOD_EXACT, None
    if d == 1:
        ok = linear_forest_oracle(g)
        return (STATUS_REALIZABLE if ok else STATUS_PRESUMED_NOT), METHOD_EXACT, None
    solve = solve_faithful if semantics == "faithful" else solve_distance
    res = solve(g, d, cfg)
    if res.status == "FOUND":
        return STATUS_REALIZABLE, METHOD_FOUND, res.residual
    return STATUS_PRESUMED_NOT, METHOD_EXHAUSTED, res.best_residual


def _classify_rep_tuple(args):
    return _classify_rep(*args)


@dataclass(frozen=True)
class GraphEntry:
    """Classification of one labelled graph in a census."""

    mask: int
    edges: tuple
    status: str
    method: str
    residual: float | None

    def to_dict(self) -> dict:
        return {
            "mask": self.mask,
            "edges": [list(e) for e in self.edges],
            "status": self.status,
            "method": self.method,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class CensusReport:
    """Counts of realizable labelled graphs on n vertices in R^d."""

    n: int
    d: int
    semantics: str
    count_realizable: int
    count_presumed_not: int
    entries: tuple
    config: dict

    @property
    def exact(self) -> bool:
        """True when every entry is oracle-backed (counts carry no uncertainty)."""
        return all(e.method == METHOD_EXACT for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "semantics": self.semantics,
            "count_realizable": self.count_realizable,
            "count_presumed_not": self.count_presumed_not,
            "exact": self.exact,
            "config": self.config,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        import json

        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        lines = ["graph_id,edges,status,method,residual"]
        for e in self.entries:
            edges = " ".join(f"{u}-{v}" for u, v in e.edges)
            residual = "" if e.residual is None else format(e.residual, ".17g")
            lines.append(f"n{self.n}-mask{e.mask},{edges},{e.status},{e.method},{residual}")
        return "\n".join(lines) + "\n"


def _run_census(n: int, d: int, semantics: str, cfg: SolverConfig, jobs: int) -> CensusReport:
    if not 1 <= n <= _MAX_CENSUS_N:
        raise ValueError(f"census supports 1 <= n <= {_MAX_CENSUS_N}, got n={n}")
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got d={d}")
    if cfg is None:
        cfg = SolverConfig()

    total = 1 << math.comb(n, 2)
    canon = [_canonical_mask(mask, n) for mask in range(total)]
    reps = sorted(set(canon))
    args = [(rep, n, d, semantics, cfg) for rep in reps]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_classify_rep_tuple, args))
    else:
        outcomes = [_classify_rep(*a) for a in args]
    by_rep = dict(zip(reps, outcomes))

    pairs = _pairs(n)
    entries = []
    realizable = 0
    for mask in range(total):
        status, method, residual = by_rep[canon[mask]]
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        entries.append(GraphEntry(mask, edges, status, method, residual))
        if status == STATUS_REALIZABLE:
            realizable += 1

    config = {
        "solver": {
            "restarts": cfg.restarts,
            "max_iters": cfg.max_iters,
            "tol_residual": cfg.tol_residual,
            "margin_nonedge": cfg.margin_nonedge,
            "seed": cfg.seed,
        },
        "jobs": jobs,
        "isomorphism_classes": len(reps),
    }
    return CensusReport(
        n=n,
        d=d,
        semantics=semantics,
        count_realizable=realizable,
        count_presumed_not=total - realizable,
        entries=tuple(entries),
        config=config,
    )


def count_faithful(n: int, d: int, cfg: SolverConfig = None, jobs: int = 1) -> CensusReport:
    """Census of faithfully realizable labelled graphs on n vertices in R^d."""
    return _run_census(n, d, "faithful", cfg, jobs)


def count_distance(n: int, d: int, cfg: SolverConfig = None, jobs: int = 1) -> CensusReport:
    """Census of distance-realizable labelled graphs on n vertices in R^d."""
    return _run_census(n, d, "distance", cfg, jobs)


def ramsey_fd_lower(s: int, d: int) -> int:
    """Largest m certified below the faithful-distance Ramsey number.

    Uses the counting argument: if C(m,s) * 2^(1-C(s,2)) * B < 1 where B
    bounds the number of faithful distance graphs on s vertices, then some
    graph on m vertices avoids realizable induced s-subgraphs in both the
    graph and its complement. B is the smaller of 2^C(s,2) and the
    zero-pattern bound (falling back to 2^C(s,2) alone when the bound's
    hypothesis fails); weakening B only weakens the conclusion, never
    breaks it.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got s={s}")
    if s < 2 * d:
        raise ValueError(f"need s >= 2d, got s={s}, d={d}")
    full = 1 << math.comb(s, 2)
    try:
        bound = min(full, zero_pattern_bound(s, d))
    except ValueError:
        bound = full
    m = s - 1
    while math.comb(m + 1, s) * 2 * bound < full:
        m += 1
    return m


def _realizable_small(mask: int, s: int, d: int, cfg: SolverConfig, memo: dict) -> bool:
    canon = _canonical_mask(mask, s)
    if canon not in memo:
        status, _, _ = _classify_rep(canon, s, d, "faithful", cfg)
        memo[canon] = status == STATUS_REALIZABLE
    return memo[canon]


def ramsey_exact(s: int, d: int, max_m: int = 8, cfg: SolverConfig = None):
    """Smallest m forcing a realizable induced s-subgraph, or "UNKNOWN".

    Exhaustive search: m qualifies when every graph on m vertices has an
    induced s-vertex subgraph such that it or its complement is faithfully
    realizable in R^d. Returns the smallest qualifying m <= max_m, or the
    string "UNKNOWN" when none is found in range.
    """
    if not 2 <= s <= 3:
        raise ValueError(f"supported range is 2 <= s <= 3, got s={s}")
    if not s <= max_m <= 8:
        raise ValueError(f"need s <= max_m <= 8, got max_m={max_m}")
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got d={d}")
    if cfg is None:
        cfg = SolverConfig()

    memo: dict = {}
    full_s = 1 << math.comb(s, 2)
    qualifying = set()
    for sub in range(full_s):
        comp = full_s - 1 - sub
        if _realizable_small(sub, s, d, cfg, memo) or _realizable_small(comp, s, d, cfg, memo):
            qualifying.add(sub)

    s_pairs = _pairs(s)
    for m in range(s, max_m + 1):
        pairs = _pairs(m)
        index = {p: i for i, p in enumerate(pairs)}
        # for each s-subset, the positions of its pairs in the m-graph mask
        subset_bits = []
        for subset in combinations(range(m), s):
            bits = []
            for a, b in s_pairs:
                bits.append(index[(subset[a], subset[b])])
            subset_bits.append(tuple(bits))

        def induced(mask: int, bits: tuple) -> int:
            sub = 0
            for i, pos in enumerate(bits):
                if mask >> pos & 1:
                    sub |= 1 << i
            return sub

        all_good = True
        for mask in range(1 << len(pairs)):
            if not any(induced(mask, bits) in qualifying for bits in subset_bits):
                all_good = False
                break
        if all_good:
            return m
    return "UNKNOWN"
