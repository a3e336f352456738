"""Densest k-vertex subgraphs and the density criterion for the altitude.

zeta(k) is the maximum number of edges induced by k vertices.  Its role: if
2*zeta(k) - k + 1 is strictly below the average degree of a connected graph,
then every edge-ordering admits an increasing path with at least k edges.
For hypercubes, zeta(k) <= k*log2(k)/2, which feeds the dimension bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, degree_stats


@dataclass(frozen=True)
class ZetaResult:
    """zeta value for one subset size; exact=False means lower bound only."""

    k: int
    value: int
    witness: tuple[int, ...]
    exact: bool
    explored: int


@dataclass(frozen=True)
class DensityProfile:
    graph_id: str
    records: tuple[ZetaResult, ...]


def _edges_within(g: Graph, mask: int) -> int:
    total = 0
    m = mask
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        total += (g.adj_mask[v] & mask).bit_count()
    return total // 2


def _greedy_fill(g: Graph, start: int, k: int) -> tuple[int, int]:
    """Grow a k-set from `start`, always adding the vertex densest into it."""
    mask = 1 << start
    edges = 0
    for _ in range(k - 1):
        best_v, best_key = -1, None
        for v in range(g.n):
            if mask >> v & 1:
                continue
            key = ((g.adj_mask[v] & mask).bit_count(), len(g.adj[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        mask |= 1 << best_v
        edges += best_key[0]
    return mask, edges


def zeta_greedy(g: Graph, k: int, seed: int) -> ZetaResult:
    """Multi-restart greedy densification; a lower bound on zeta(k)."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k must lie in 1..{g.n}")
    rng = random.Random(seed)
    starts = [max(range(g.n), key=lambda v: (len(g.adj[v]), -v))]
    restarts = min(g.n, 16)
    starts += [rng.randrange(g.n) for _ in range(restarts - 1)]
    best_mask, best_edges = -1, -1
    for s in starts:
        mask, edges = _greedy_fill(g, s, k)
        if edges > best_edges:
            best_mask, best_edges = mask, edges
    witness = tuple(v for v in range(g.n) if best_mask >> v & 1)
    return ZetaResult(k, best_edges, witness, exact=False, explored=len(starts))


def zeta_exact(g: Graph, k: int, budget: int | None = None) -> ZetaResult:
    """Exact zeta(k) by branch-and-bound over vertex subsets.

    Branches on the candidate densest into the chosen set (ties by degree,
    then id), include-first.  A branch dies when even the optimistic
    completion cannot beat the incumbent: chosen edges, plus the best t
    values of (edges into chosen) summed, plus min of C(t,2) and half the
    best t remaining-side degrees, where t is the number of open slots.
    With a budget, exhaustion returns the incumbent flagged inexact.
    """
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    masks = g.adj_mask
    seed_res = zeta_greedy(g, k, seed=0)
    best = seed_res.value
    best_mask = 0
    for v in seed_res.witness:
        best_mask |= 1 << v
    cap = k * (k - 1) // 2
    explored = 0
    exhausted = False

    def rec(S: int, e_S: int, R: int, t: int) -> None:
        nonlocal best, best_mask, explored, exhausted
        if exhausted or best == cap:
            return
        explored += 1
        if budget is not None and explored > budget:
            exhausted = True
            return
        if t == 0:
            if e_S > best:
                best, best_mask = e_S, S
            return
        if R.bit_count() < t:
            return
        # One pass over R: per-vertex counts for the bound and the branch pick.
        into_S: list[int] = []
        coupled: list[int] = []  # 2*into_S + degree within R
        pick, pick_key = -1, None
        Rm = R
        while Rm:
            b = Rm & -Rm
            v = b.bit_length() - 1
            Rm ^= b
            c = (masks[v] & S).bit_count()
            dr = (masks[v] & R).bit_count()
            into_S.append(c)
            coupled.append(2 * c + dr)
            key = (c, dr, -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        into_S.sort(reverse=True)
        coupled.sort(reverse=True)
        twice_a = 2 * e_S + sum(coupled[:t])
        twice_b = 2 * e_S + 2 * sum(into_S[:t]) + t * (t - 1)
        if min(twice_a, twice_b) <= 2 * best:
            return
        bit = 1 << pick
        rec(S | bit, e_S + (masks[pick] & S).bit_count(), R ^ bit, t - 1)
        rec(S, e_S, R ^ bit, t)

    rec(0, 0, (1 << n) - 1, k)
    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    return ZetaResult(k, best, witness, exact=not exhausted, explored=explored)


def rodl_criterion(g: Graph, k: int, zeta_k: int) -> bool:
    """True iff 2*zeta(k) - k + 1 < average degree, certifying f(G) >= k.

    Exact rational comparison.  Requires a connected graph: the chain that
    justifies the criterion augments a densest set one adjacent vertex at a
    time, which needs connectivity.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must lie in 1..{g.n}")
    stats = degree_stats(g)
    if not stats.connected:
        raise ValueError("criterion applies to connected graphs only")
    return 2 * zeta_k - k + 1 < stats.average_degree


def hypercube_zeta_bound_check(d: int, k: int, zeta_k: int) -> bool:
    """True iff zeta_k <= k*log2(k)/2, decided exactly.

    The comparison is equivalent to the integer-power comparison
    4**zeta_k <= k**k, so the verdict is rigorous in both directions with
    no transcendental evaluation at all.
    """
    if d < 0 or k < 1 or zeta_k < 0:
        raise ValueError("need d >= 0, k >= 1, zeta_k >= 0")
    return 4**zeta_k <= k**k


def density_profile(
    g: Graph, graph_id: str, ks, budget: int | None = None
) -> DensityProfile:
    """zeta records for each requested subset size."""
    return DensityProfile(graph_id, tuple(zeta_exact(g, k, budget) for k in ks))
