"""Exact altitude f(G) = min over edge-orderings of the longest increasing path.

The search assigns ranks 1, 2, ..., m to edges one at a time.  Increasing
paths live entirely among already-ranked edges, so the partial value can
only grow as ranks are appended: a branch whose prefix already reaches the
incumbent is dead.  The incumbent starts at the coloring-ordering value,
and the square-root-of-average-degree floor certifies optimality early for
many small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .graphs import Graph, hypercube_dimension, is_complete
from .orderings import EdgeOrdering, coloring_ordering, greedy_edge_coloring, identity_ordering
from .paths import longest_increasing_path, longest_increasing_trail
from .pedestrian import sqrt_degree_floor


@dataclass(frozen=True)
class AltitudeResult:
    """f(G) with a witness ordering.

    When exact, value == lower and the witness achieves it.  On budget
    exhaustion, value is the best incumbent (an upper bound), lower a
    proved floor, and exact is False.
    """

    value: int
    lower: int
    witness: EdgeOrdering
    explored: int
    exact: bool


@dataclass(frozen=True)
class SandwichReport:
    """Best known bracket on f(G) with labeled sources."""

    lower: int
    upper: int
    lower_candidates: tuple[tuple[str, int], ...]
    upper_candidates: tuple[tuple[str, int], ...]


# ----------------------------------------------------------------------
# Edge orbits from explicitly found automorphisms
# ----------------------------------------------------------------------

def _refine_colors(g: Graph) -> list[int]:
    col = [len(g.adj[v]) for v in range(g.n)]
    for _ in range(g.n):
        sig = [
            (col[v], tuple(sorted(col[w] for w, _ in g.adj[v]))) for v in range(g.n)
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ids[s] for s in sig]
        if new == col:
            break
        col = new
    return col


def edge_orbits(g: Graph, node_cap: int = 20000) -> tuple[tuple[int, ...], ...]:
    """Partition edge indices into classes merged only by real automorphisms.

    Backtracking over color-preserving vertex bijections, capped by a node
    budget; every complete bijection found merges each edge with its image.
    The cap can only leave classes too fine, never too coarse, so callers
    may treat same-class edges as interchangeable.
    """
    n, m = g.n, g.m
    if m == 0:
        return ()
    col = _refine_colors(g)
    order = sorted(range(n), key=lambda v: (col.count(col[v]), v))
    eidx = {e: i for i, e in enumerate(g.edges)}

    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    nodes = 0
    found = 0
    image = [-1] * n
    used = [False] * n

    def bt(level: int) -> None:
        nonlocal nodes, found
        if nodes > node_cap or found >= 120:
            return
        nodes += 1
        if level == n:
            found += 1
            for (a, b), e in eidx.items():
                ia, ib = image[a], image[b]
                union(e, eidx[(ia, ib) if ia < ib else (ib, ia)])
            return
        v = order[level]
        for w in range(n):
            if used[w] or col[w] != col[v]:
                continue
            ok = True
            for u in order[:level]:
                if (g.adj_mask[v] >> u & 1) != (g.adj_mask[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            bt(level + 1)
            used[w] = False
            image[v] = -1
            if nodes > node_cap or found >= 120:
                return

    bt(0)
    groups: dict[int, list[int]] = {}
    for e in range(m):
        groups.setdefault(find(e), []).append(e)
    return tuple(tuple(sorted(grp)) for _, grp in sorted(groups.items()))


# ----------------------------------------------------------------------
# Minimax search for f
# ----------------------------------------------------------------------

def _certified_floor(g: Graph, ceiling: int) -> int:
    """Best proved lower bound on f(G) available without ordering search.

    Starts from the square-root-of-average-degree floor and, on connected
    graphs, pushes it up with the density criterion while exact zeta values
    keep certifying, stopping once the floor meets ``ceiling``.
    """
    from .density import rodl_criterion, zeta_exact
    from .graphs import degree_stats

    floor = sqrt_degree_floor(g)
    if floor >= ceiling:
        return floor
    if degree_stats(g).connected:
        k = floor + 1
        while k <= min(g.n, ceiling):
            zr = zeta_exact(g, k, budget=50000)
            if not zr.exact or not rodl_criterion(g, k, zr.value):
                break
            floor = k
            k += 1
    return floor


def exact_f(g: Graph, budget: int | None = None) -> AltitudeResult:
    """Minimum over all orderings of the longest increasing path length.

    Branch-and-bound over rank assignments with the prefix value as the
    pruning key; first-level branches range over one representative per
    edge orbit.  ``budget`` caps node expansions; exhaustion returns the
    bracket [proved floor, incumbent] flagged inexact.
    """
    m = g.m
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if m == 0:
        return AltitudeResult(0, 0, identity_ordering(g), 0, True)

    phi0 = coloring_ordering(g, greedy_edge_coloring(g), seed=0)
    inc = longest_increasing_path(g, phi0)
    assert inc.exact
    best_val = inc.length
    best_ord = phi0
    floor = _certified_floor(g, best_val)
    if best_val <= floor:
        return AltitudeResult(best_val, best_val, best_ord, 0, True)

    rank_of = [0] * m  # 0 = unranked; otherwise the assigned rank
    explored = 0
    exhausted = False
    adj = g.adj

    def longest_ending_at(e: int, r: int) -> int:
        """Longest increasing path among ranked edges that ends with edge e."""
        u, v = g.edges[e]
        base = (1 << u) | (1 << v)

        def back(x: int, below: int, mask: int) -> int:
            out = 0
            for w, e2 in adj[x]:
                r2 = rank_of[e2]
                if 0 < r2 < below and not mask >> w & 1:
                    got = 1 + back(w, r2, mask | (1 << w))
                    if got > out:
                        out = got
            return out

        return 1 + max(back(u, r, base), back(v, r, base))

    def rec(depth: int, prefix_psi: int, unranked: list[int]) -> None:
        nonlocal best_val, best_ord, explored, exhausted
        if exhausted or best_val <= floor:
            return
        explored += 1
        if budget is not None and explored > budget:
            exhausted = True
            return
        if depth == m:
            best_val = prefix_psi
            best_ord = EdgeOrdering(tuple(rank_of))
            return
        if depth == 0:
            candidates = [orb[0] for orb in edge_orbits(g)]
        else:
            candidates = unranked
        scored = []
        r = depth + 1
        for e in candidates:
            rank_of[e] = r
            child_psi = max(prefix_psi, longest_ending_at(e, r))
            rank_of[e] = 0
            if child_psi < best_val:
                scored.append((child_psi, e))
        scored.sort()
        for child_psi, e in scored:
            if child_psi >= best_val:
                continue
            rank_of[e] = r
            rest = [x for x in unranked if x != e]
            rec(depth + 1, child_psi, rest)
            rank_of[e] = 0
            if exhausted or best_val <= floor:
                return

    rec(0, 0, list(range(m)))
    if exhausted:
        return AltitudeResult(best_val, floor, best_ord, explored, False)
    return AltitudeResult(best_val, best_val, best_ord, explored, True)


# ----------------------------------------------------------------------
# Bound collection
# ----------------------------------------------------------------------

def f_bounds_sandwich(g: Graph, psi_budget: int | None = 200000) -> SandwichReport:
    """Best lower and upper bounds on f(G) from every cheap source.

    Lower: the square-root-of-average-degree floor, the density criterion
    at growing k (connected graphs), and family formulas for hypercubes and
    complete graphs.  Upper: class count of a proper coloring, the trail
    value of its ordering, its exact path value when affordable, and family
    formulas.  Maxima of pedestrian runs are deliberately absent: they
    bound one ordering's value from below, not the minimum over orderings.
    """
    from .density import rodl_criterion, zeta_exact

    if g.n == 0:
        raise ValueError("graph has no vertices")
    lowers: list[tuple[str, int]] = []
    uppers: list[tuple[str, int]] = []

    if g.m == 0:
        return SandwichReport(0, 0, (("empty", 0),), (("empty", 0),))

    floor = sqrt_degree_floor(g)
    lowers.append(("sqrt-average-degree", floor))

    from .graphs import degree_stats

    stats = degree_stats(g)
    if stats.connected:
        k = max(2, floor + 1)
        while k <= g.n:
            zr = zeta_exact(g, k, budget=psi_budget)
            if not zr.exact or not rodl_criterion(g, k, zr.value):
                break
            lowers.append((f"density-criterion-k{k}", k))
            k += 1

    coloring = greedy_edge_coloring(g)
    uppers.append(("edge-coloring-classes", coloring.num_colors))
    phi = coloring_ordering(g, coloring, seed=0)
    uppers.append(("coloring-ordering-trail", longest_increasing_trail(g, phi).length))
    res = longest_increasing_path(g, phi, budget=psi_budget)
    if res.exact:
        uppers.append(("coloring-ordering-path", res.length))

    from .bounds import hypercube_k

    d = hypercube_dimension(g)
    if d is not None and d >= 1:
        lowers.append(("hypercube-ratio", 1 if d == 1 else hypercube_k(d)))
        uppers.append(("hypercube-dimension", d))
    if is_complete(g) and g.n >= 2:
        n = g.n
        # ceil((sqrt(4n-3) - 1) / 2): smallest L with (2L+1)**2 >= 4n-3
        L = 0
        while (2 * L + 1) ** 2 < 4 * n - 3:
            L += 1
        lowers.append(("complete-sqrt", L))
        uppers.append(("complete-three-quarters", (3 * n) // 4))

    lo = max(v for _, v in lowers)
    hi = min(v for _, v in uppers)
    return SandwichReport(lo, hi, tuple(lowers), tuple(uppers))
