"""Brute-force enumerators used to cross-check the fast implementations.

Everything here favours obviousness over speed: plain recursion over all
candidate objects, no pruning beyond feasibility.  Only usable on small
inputs, which is the point.
"""

from __future__ import annotations

from itertools import combinations, permutations

from altitude import EdgeOrdering, Graph


def brute_psi(g: Graph, ordering: EdgeOrdering) -> int:
    """Longest increasing path by enumerating every simple increasing path."""
    best = 0

    def dfs(v: int, last: int, visited: frozenset[int], length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for w, e in g.adj[v]:
            r = ordering.rank[e]
            if r > last and w not in visited:
                dfs(w, r, visited | {w}, length + 1)

    for v in range(g.n):
        dfs(v, 0, frozenset((v,)), 0)
    return best


def brute_trail(g: Graph, ordering: EdgeOrdering) -> int:
    """Longest increasing trail by enumerating every increasing trail."""
    best = 0

    def dfs(v: int, last: int, used: frozenset[int], length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for w, e in g.adj[v]:
            r = ordering.rank[e]
            if r > last and e not in used:
                dfs(w, r, used | {e}, length + 1)

    for v in range(g.n):
        dfs(v, 0, frozenset(), 0)
    return best


def brute_f(g: Graph) -> int:
    """Altitude by minimising brute_psi over all m! edge-orderings."""
    if g.m == 0:
        return 0
    if g.m > 6:
        raise ValueError("factorial enumeration is capped at m = 6")
    best = g.m
    for perm in permutations(range(1, g.m + 1)):
        best = min(best, brute_psi(g, EdgeOrdering(perm)))
        if best == 1:
            break  # psi >= 1 whenever m >= 1, so 1 cannot be beaten
    return best


def brute_zeta(g: Graph, k: int) -> int:
    """Densest k-subset value by enumerating all vertex subsets of size k."""
    best = 0
    for subset in combinations(range(g.n), k):
        inside = set(subset)
        best = max(best, sum(1 for a, b in g.edges if a in inside and b in inside))
    return best
