"""Simple undirected graphs, edge-list I/O, generators and parity walks."""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class ParityInfeasible(GraphError):
    """No walk of the requested parity joins the two vertices."""


class NotConnected(GraphError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            clean.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(norm_edge(int(u), int(v)) for u, v in edges))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 0..k-1, plus the map back to old labels."""
        old = sorted(vertices)
        idx = {v: i for i, v in enumerate(old)}
        edges = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return Graph.from_edges(len(old), edges), old

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __str__(self) -> str:
        return write_graph(self)


# --- edge-list text format ---------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v".  '#' lines are comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError(1, "missing 'n m' header")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(lineno, f"header must be 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(lineno, "header values must be integers") from None
    if n < 0 or m < 0:
        raise ParseError(lineno, "negative count in header")
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(where, f"header announces {m} edges, found {len(body)}")
    seen: set[Edge] = set()
    for lineno, tok in body:
        if len(tok) != 2:
            raise ParseError(lineno, f"edge line must be 'u v', got {' '.join(tok)!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(lineno, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1} in edge ({u}, {v})")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(lineno, f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
    return Graph(n, frozenset(seen))


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


# --- generators --------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle length must be >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite parts must be non-empty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) drawn with ``random.Random(seed)``, pairs in lexicographic order."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return Graph.from_edges(offset, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star", "gnp", "disjoint_union", "petersen")


def generate(family: str, params: Sequence = (), seed: int = 0) -> Graph:
    """Build a graph from a family name and positional parameters.

    ``disjoint_union`` takes a sequence of Graphs (or of family specs such as
    ``("complete", 8)``).
    """
    try:
        if family == "path":
            return path(int(params[0]))
        if family == "cycle":
            return cycle(int(params[0]))
        if family == "complete":
            return complete(int(params[0]))
        if family == "complete_bipartite":
            return complete_bipartite(int(params[0]), int(params[1]))
        if family == "star":
            return star(int(params[0]))
        if family == "gnp":
            return gnp(int(params[0]), float(params[1]), seed)
        if family == "petersen":
            return petersen()
        if family == "disjoint_union":
            parts = []
            for item in params:
                if isinstance(item, Graph):
                    parts.append(item)
                else:
                    parts.append(generate(item[0], item[1:], seed))
            return disjoint_union(parts)
    except (IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters for {family}: {list(params)!r}") from exc
    raise GraphError(f"unknown family {family!r}")


# --- structure ---------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph, component: Sequence[int] | None = None) -> tuple[list[int], list[int]] | None:
    """Two-colour a connected vertex set; None if it holds an odd cycle.

    The first part contains the smallest vertex.
    """
    comp = sorted(component) if component is not None else list(range(g.n))
    if not comp:
        return [], []
    side = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in side:
                side[w] = 1 - side[u]
                queue.append(w)
            elif side[w] == side[u]:
                return None
    if len(side) != len(comp):
        raise NotConnected("bipartition expects a connected vertex set")
    return (sorted(v for v in comp if side[v] == 0),
            sorted(v for v in comp if side[v] == 1))


def is_bipartite(g: Graph) -> bool:
    return all(bipartition(g, c) is not None for c in components(g))


# --- parity walks -------------------------------------------------------------

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class WalkPlan:
    """A walk x_1..x_m.  Parity refers to the vertex count m."""

    vertices: tuple[int, ...]

    @property
    def parity(self) -> str:
        return EVEN if len(self.vertices) % 2 == 0 else ODD

    @property
    def edges(self) -> list[Edge]:
        return [norm_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def check(self, g: Graph) -> None:
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"walk step {a}-{b} is not an edge")


def _parity_distances(g: Graph, target: int) -> dict[tuple[int, int], int]:
    # state (v, q): q is the parity of the number of edges still to walk
    dist = {(target, 0): 0}
    queue = deque([(target, 0)])
    while queue:
        v, q = queue.popleft()
        d = dist[(v, q)]
        for w in g.adj[v]:
            s = (w, 1 - q)
            if s not in dist:
                dist[s] = d + 1
                queue.append(s)
    return dist


def shortest_parity_walk(g: Graph, x1: int, x2: int, parity: str) -> WalkPlan:
    """Shortest walk from x1 to x2 with an even or odd number of vertices.

    Breadth-first search over (vertex, edge-count parity); among shortest
    walks the lexicographically smallest vertex sequence wins.
    """
    if parity not in (EVEN, ODD):
        raise ValueError(f"parity must be {EVEN!r} or {ODD!r}")
    if x1 == x2:
        raise GraphError("walk endpoints must differ")
    dist = _parity_distances(g, x2)
    if (x1, 0) not in dist and (x1, 1) not in dist:
        raise NotConnected(f"vertices {x1} and {x2} lie in different components")
    q = 1 if parity == EVEN else 0  # even vertex count <=> odd edge count
    if (x1, q) not in dist:
        raise ParityInfeasible(f"no {parity} walk from {x1} to {x2} (bipartite parity obstruction)")
    walk = [x1]
    v = x1
    while dist[(v, q)] > 0:
        need = dist[(v, q)] - 1
        v = next(w for w in g.adj[v] if dist.get((w, 1 - q)) == need)
        q = 1 - q
        walk.append(v)
    return WalkPlan(tuple(walk))
