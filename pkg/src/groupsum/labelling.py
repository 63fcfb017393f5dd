"""Edge labellings over an Abelian group and the walk relabelling primitives.

Every construction starts from the all-zero labelling and only ever adds
group elements along walks:

* ``apply_walk`` adds a, -a, a, ... along the edges of a walk, which moves
  only the endpoint weighted degrees;
* ``phi_even`` / ``phi_odd`` do this on the shortest even / odd walk,
  giving (+a, +a) / (+a, -a) at the endpoints;
* ``broadcast_even_class`` and ``broadcast_odd_pair`` raise whole vertex
  sets by a (resp. a and -a) by composing the two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .abelian import GroupElement, GroupSpec
from .graph import (EVEN, ODD, Edge, Graph, GraphError, ParityInfeasible, WalkPlan,
                    bipartition, components, norm_edge, shortest_parity_walk)


class LabellingError(ValueError):
    pass


class EdgeLabelling:
    """Mutable map edge -> group element over a fixed graph (single writer)."""

    def __init__(self, graph: Graph, spec: GroupSpec, labels: dict[Edge, GroupElement] | None = None):
        self.graph = graph
        self.spec = spec
        self.label = {e: spec.zero for e in graph.edge_list}
        if labels:
            for (u, v), a in labels.items():
                e = norm_edge(u, v)
                if e not in self.label:
                    raise LabellingError(f"({u}, {v}) is not an edge of the graph")
                self.label[e] = spec.element(a)
        self._side: dict[int, int] | None = None

    def copy(self) -> "EdgeLabelling":
        return EdgeLabelling(self.graph, self.spec, dict(self.label))

    def add_to(self, u: int, v: int, a: GroupElement) -> None:
        e = norm_edge(u, v)
        if e not in self.label:
            raise LabellingError(f"({u}, {v}) is not an edge of the labelled graph")
        self.label[e] = self.spec.add(self.label[e], a)

    def side(self, v: int) -> int | None:
        """Bipartition side of v, or None if v's component is not bipartite."""
        if self._side is None:
            self._side = {}
            for comp in components(self.graph):
                parts = bipartition(self.graph, comp)
                if parts is not None:
                    for i, part in enumerate(parts):
                        for x in part:
                            self._side[x] = i
        return self._side.get(v)

    def degrees(self) -> dict[int, GroupElement]:
        return weighted_degrees(self.graph, self)


# --- primitives ----------------------------------------------------------------

def apply_walk(f: EdgeLabelling, walk: WalkPlan, a: GroupElement) -> None:
    """Add a to odd-position edges and -a to even-position edges of the walk."""
    f.spec.check(a)
    try:
        walk.check(f.graph)
    except GraphError as exc:
        raise LabellingError(f"walk does not belong to the labelled graph: {exc}") from None
    minus = f.spec.neg(a)
    for pos, (x, y) in enumerate(zip(walk.vertices, walk.vertices[1:])):
        f.add_to(x, y, a if pos % 2 == 0 else minus)


def phi_even(f: EdgeLabelling, x1: int, x2: int, a: GroupElement) -> None:
    """Raise w(x1) and w(x2) by a along the shortest even walk."""
    if a == f.spec.zero:
        return
    apply_walk(f, shortest_parity_walk(f.graph, x1, x2, EVEN), a)


def phi_odd(f: EdgeLabelling, x1: int, x2: int, a: GroupElement) -> None:
    """Raise w(x1) by a and w(x2) by -a along the shortest odd walk."""
    if a == f.spec.zero:
        return
    apply_walk(f, shortest_parity_walk(f.graph, x1, x2, ODD), a)


def _plan_broadcast(f: EdgeLabelling, vertices: Iterable[int], a: GroupElement) -> list[tuple[WalkPlan, GroupElement]]:
    vs = sorted(set(vertices))
    spec = f.spec
    if a == spec.zero:
        return []
    if len(vs) % 2:
        raise LabellingError(f"cannot broadcast nonzero {a} to an odd set of size {len(vs)}")
    plan = []
    for x, y in zip(vs[::2], vs[1::2]):
        sx, sy = f.side(x), f.side(y)
        if sx is not None and sx == sy:
            if spec.scale(2, a) != spec.zero:
                raise ParityInfeasible(
                    f"{x} and {y} share a bipartition side; only elements with 2a = 0 can be broadcast")
            plan.append((shortest_parity_walk(f.graph, x, y, ODD), a))
        else:
            plan.append((shortest_parity_walk(f.graph, x, y, EVEN), a))
    return plan


def broadcast_even_class(f: EdgeLabelling, vertices: Iterable[int], a: GroupElement) -> None:
    """Raise the weighted degree of every vertex in an even-sized set by a.

    Vertices are paired consecutively in sorted order.  Pairs split across a
    bipartition use an even walk; pairs on the same side of a bipartite
    component can only use an odd walk, which is correct when 2a = 0.
    All walks are found before any label changes.
    """
    for walk, x in _plan_broadcast(f, vertices, a):
        apply_walk(f, walk, x)


def broadcast_odd_pair(f: EdgeLabelling, vj: Sequence[int], vk: Sequence[int], a: GroupElement) -> None:
    """Raise every vertex of odd set vj by a and of odd set vk by -a."""
    vj, vk = sorted(set(vj)), sorted(set(vk))
    if len(vj) % 2 == 0 or len(vk) % 2 == 0:
        raise LabellingError("both sets must have odd size")
    if set(vj) & set(vk):
        raise LabellingError("sets must be disjoint")
    xj, xk = vj[0], vk[0]
    plan = []
    if a != f.spec.zero:
        plan.append((shortest_parity_walk(f.graph, xj, xk, ODD), a))
    plan += _plan_broadcast(f, vj[1:], a)
    plan += _plan_broadcast(f, vk[1:], f.spec.neg(a))
    for walk, x in plan:
        apply_walk(f, walk, x)


def weighted_degrees(g: Graph, f: EdgeLabelling) -> dict[int, GroupElement]:
    spec = f.spec
    w = {v: spec.zero for v in range(g.n)}
    for (u, v), a in f.label.items():
        w[u] = spec.add(w[u], a)
        w[v] = spec.add(w[v], a)
    return w


# --- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    graph: Graph
    spec: GroupSpec
    labels: dict = field(hash=False)
    weighted_degrees: dict = field(hash=False)
    valid: bool
    violations: tuple[Edge, ...]

    def recheck(self) -> "Certificate":
        f = EdgeLabelling(self.graph, self.spec, self.labels)
        return verify(self.graph, f)

    def to_json(self) -> dict:
        return {
            "group": str(self.spec),
            "labels": [{"u": u, "v": v, "residues": list(self.labels[(u, v)])}
                       for u, v in sorted(self.labels)],
            "degrees": [{"v": v, "residues": list(self.weighted_degrees[v])}
                        for v in sorted(self.weighted_degrees)],
            "valid": self.valid,
            "violations": [list(e) for e in self.violations],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def verify(g: Graph, f: EdgeLabelling) -> Certificate:
    if set(f.label) != set(g.edges):
        raise LabellingError("labelling domain differs from the graph's edge set")
    w = weighted_degrees(g, f)
    bad = tuple(e for e in g.edge_list if w[e[0]] == w[e[1]])
    return Certificate(g, f.spec, dict(f.label), w, not bad, bad)


def certificate_from_json(g: Graph, data: dict) -> tuple[EdgeLabelling, dict]:
    """Rebuild the labelling stored in a certificate object; also return its claimed degrees."""
    spec = GroupSpec.parse(data["group"])
    labels = {}
    for item in data["labels"]:
        e = norm_edge(int(item["u"]), int(item["v"]))
        if e in labels:
            raise LabellingError(f"edge {e} labelled twice")
        labels[e] = spec.element(item["residues"])
    if set(labels) != set(g.edges):
        missing = sorted(set(g.edges) - set(labels))
        extra = sorted(set(labels) - set(g.edges))
        raise LabellingError(f"certificate edges do not match graph (missing {missing}, extra {extra})")
    claimed = {int(d["v"]): tuple(d["residues"]) for d in data.get("degrees", [])}
    return EdgeLabelling(g, spec, labels), claimed
