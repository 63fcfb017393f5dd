"""Exhaustive ground truth for small instances.

Nothing here reuses the constructive code paths: labellings are searched
leaf by leaf, colourings come from raw set partitions, and zero-sum subsets
are decided over bit vectors.
"""

from __future__ import annotations

import itertools
import os
from collections import deque

from .abelian import GroupSpec, enumerate_abelian_groups
from .graph import Graph
from .labelling import EdgeLabelling

DEFAULT_BUDGET = int(os.environ.get("GROUPSUM_BUDGET", 10**7))


class BudgetExceeded(RuntimeError):
    pass


def _closing_order(g: Graph) -> list[tuple[int, int]]:
    # visit vertices breadth-first and list each vertex's outstanding edges
    order, seen = [], [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    edges, listed = [], set()
    for u in order:
        for w in g.adj[u]:
            e = (min(u, w), max(u, w))
            if e not in listed:
                listed.add(e)
                edges.append(e)
    return edges


def brute_exists_labelling(g: Graph, spec: GroupSpec, budget: int | None = None) -> EdgeLabelling | None:
    """Search every f: E -> G with pruning; return a valid labelling or None."""
    budget = DEFAULT_BUDGET if budget is None else budget
    h, m = spec.order, g.m
    if h ** m > budget:
        raise BudgetExceeded(f"{h}^{m} labellings exceed the budget of {budget}")
    elems = spec.elements
    index = {a: i for i, a in enumerate(elems)}
    table = [[index[spec.add(a, b)] for b in elems] for a in elems]
    edges = _closing_order(g)
    last = {}
    for i, (u, v) in enumerate(edges):
        last[u] = i
        last[v] = i
    closes = [[] for _ in edges]
    for v, i in last.items():
        closes[i].append(v)
    closed = [g.degree(v) == 0 for v in range(g.n)]
    deg = [0] * g.n
    choice = [0] * m

    def ok(v: int) -> bool:
        return all(not closed[w] or deg[w] != deg[v] for w in g.adj[v])

    def rec(i: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        du, dv = deg[u], deg[v]
        for x in range(h):
            deg[u], deg[v] = table[du][x], table[dv][x]
            fine = True
            for w in closes[i]:
                if not ok(w):
                    fine = False
                    break
                closed[w] = True
            if fine and rec(i + 1):
                choice[i] = x
                return True
            for w in closes[i]:
                closed[w] = False
        deg[u], deg[v] = du, dv
        return False

    if not rec(0):
        return None
    return EdgeLabelling(g, spec, {e: elems[x] for e, x in zip(edges, choice)})


def brute_chi_sum(g: Graph, budget: int | None = None) -> int:
    """Smallest s >= 2 such that every Abelian group of order s labels g."""
    for s in range(2, g.n + 2):
        if all(brute_exists_labelling(g, spec, budget) is not None for spec in enumerate_abelian_groups(s)):
            return s
    raise RuntimeError("no order up to n+1 works; does the graph have a component of order < 3?")


def brute_zero_sum_subsets(k: int, r: int) -> bool:
    """Does some r-subset of (Z2)^k (as k-bit integers) XOR to zero?

    Counts subsets by (size, xor) over all 2^k elements, which decides
    every r at once without relying on any structural argument.
    """
    if not 0 <= k <= 5:
        raise ValueError("k must lie in 0..5")
    full = 1 << k
    counts = [[0] * full for _ in range(full + 1)]
    counts[0][0] = 1
    for x in range(full):
        for size in range(full - 1, -1, -1):
            row, nxt = counts[size], counts[size + 1]
            for acc in range(full):
                if row[acc]:
                    nxt[acc ^ x] += row[acc]
    return 0 <= r <= full and counts[r][0] > 0


def brute_zero_sum_subsets_naive(k: int, r: int) -> bool:
    """Literal scan over all r-subsets; only sensible for k <= 3."""
    return any(not _xor(c) for c in itertools.combinations(range(1 << k), r))


def _xor(items) -> int:
    acc = 0
    for x in items:
        acc ^= x
    return acc


def _set_partitions(n: int):
    """All set partitions of range(n) as restricted growth strings."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(a)
            return
        for b in range(top + 2):
            a[i] = b
            yield from rec(i + 1, max(top, b))

    a[0] = 0
    yield from rec(1, 0)


def brute_ugly(g: Graph, max_n: int = 10) -> bool:
    """Ugliness re-derived from scratch by filtering all set partitions."""
    if g.n > max_n:
        raise BudgetExceeded(f"brute_ugly limited to n <= {max_n}")
    proper = [p for p in _set_partitions(g.n) if all(p[u] != p[v] for u, v in g.edges)]
    chi = min(max(p) + 1 for p in proper)
    ts = set()
    for p in proper:
        if max(p) + 1 == chi:
            sizes = [p.count(b) for b in range(chi)]
            ts.add(sum(s % 2 for s in sizes))
    if chi % 4 == 2:
        return ts == {chi}
    if chi >= 4 and chi & (chi - 1) == 0:
        return ts <= {2, chi - 2}
    return False


def brute_chromatic_number(g: Graph, max_n: int = 10) -> int:
    if g.n > max_n:
        raise BudgetExceeded(f"brute chromatic number limited to n <= {max_n}")
    return min(max(p) + 1 for p in _set_partitions(g.n) if all(p[u] != p[v] for u, v in g.edges))
