"""Named test graphs with their known group sum chromatic numbers."""

from __future__ import annotations

import random

from .graph import (Graph, complete, complete_bipartite, cycle, disjoint_union, gnp, is_connected,
                    path, petersen, components)

# name -> (graph factory, expected chi_sum_g)
DICHOTOMY = {
    "P3": (lambda: path(3), 2),
    "C4": (lambda: cycle(4), 2),
    "C5": (lambda: cycle(5), 3),
    "C6": (lambda: cycle(6), 3),
    "K1,3": (lambda: complete_bipartite(1, 3), 3),
    "K4": (lambda: complete(4), 4),
    "K5": (lambda: complete(5), 5),
    "K6": (lambda: complete(6), 7),
    "Petersen": (petersen, 3),
    "C6+K3": (lambda: disjoint_union([cycle(6), complete(3)]), 3),
    "K8+K6": (lambda: disjoint_union([complete(8), complete(6)]), 9),
}


def dichotomy_graphs() -> dict[str, Graph]:
    return {name: make() for name, (make, _) in DICHOTOMY.items()}


def small_corpus() -> dict[str, Graph]:
    """Extra small graphs (at most 8 edges) next to the dichotomy table."""
    g = dichotomy_graphs()
    extra = {
        "P4": path(4),
        "P5": path(5),
        "C3": cycle(3),
        "C7": cycle(7),
        "C8": cycle(8),
        "K1,4": complete_bipartite(1, 4),
        "K1,5": complete_bipartite(1, 5),
        "K2,2": complete_bipartite(2, 2),
        "K2,3": complete_bipartite(2, 3),
        "paw": Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        "diamond": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "bull": Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
        "K4+pendant": Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]),
        "house": Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
        "P3+P3": disjoint_union([path(3), path(3)]),
        "C3+P3": disjoint_union([cycle(3), path(3)]),
    }
    g.update(extra)
    return g


def connected_catalogue(max_n: int = 7) -> list[Graph]:
    """All connected graphs on 3..max_n vertices (max_n <= 7), one per isomorphism class.

    Taken from the networkx graph atlas, in atlas order.
    """
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        if 3 <= n <= max_n:
            g = Graph.from_edges(n, nxg.edges())
            if is_connected(g):
                out.append(g)
    return out


def random_connected(count: int = 200, max_n: int = 12, seed: int = 2024) -> list[Graph]:
    """Seeded G(n, p) draws with n <= max_n and p in [0.3, 0.7], rejecting small components."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        p = rng.uniform(0.3, 0.7)
        g = gnp(n, p, seed=rng.randrange(2**31))
        if all(len(c) >= 3 for c in components(g)) and is_connected(g):
            out.append(g)
    return out
