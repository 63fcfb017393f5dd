"""Exact colouring: chromatic number, enumeration of chi-colourings, ugliness."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .abelian import GroupSpec
from .graph import Graph, components, is_connected

CHROMATIC_CAP = 30
ENUMERATION_CAP = 16


class ColouringError(ValueError):
    pass


class TooLarge(ColouringError):
    """Instance exceeds an exact-search size cap."""


class UglyObstruction(ColouringError):
    """No chi-colouring has a parity profile the group can realise."""


@dataclass(frozen=True)
class ParityProfile:
    sizes: tuple[int, ...]

    @property
    def t(self) -> int:
        return sum(1 for s in self.sizes if s % 2)


@dataclass(frozen=True)
class ProperColouring:
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]]) -> "ProperColouring":
        return cls(tuple(tuple(sorted(c)) for c in classes))

    @property
    def c(self) -> int:
        return len(self.classes)

    @cached_property
    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    @property
    def profile(self) -> ParityProfile:
        return ParityProfile(tuple(len(c) for c in self.classes))

    @property
    def t(self) -> int:
        return self.profile.t

    def odd_first(self) -> "ProperColouring":
        odd = [c for c in self.classes if len(c) % 2]
        even = [c for c in self.classes if len(c) % 2 == 0]
        return ProperColouring(tuple(odd + even))

    def check(self, g: Graph) -> None:
        seen = [v for c in self.classes for v in c]
        if sorted(seen) != list(range(g.n)):
            raise ColouringError("classes do not partition the vertex set")
        for c in self.classes:
            if not c:
                raise ColouringError("empty colour class")
        cls = self.class_of
        for u, v in g.edges:
            if cls[u] == cls[v]:
                raise ColouringError(f"edge ({u}, {v}) inside colour class {cls[u]}")


# --- chromatic number ---------------------------------------------------------

def _greedy_upper(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colour: dict[int, int] = {}
    for v in order:
        used = {colour[w] for w in g.adj[v] if w in colour}
        colour[v] = next(i for i in range(g.n + 1) if i not in used)
    return max(colour.values(), default=-1) + 1


def _clique_lower(g: Graph) -> int:
    # greedy clique from every start vertex
    best = 1 if g.n else 0
    for s in range(g.n):
        clique = [s]
        for v in sorted(g.adj[s], key=lambda v: (-g.degree(v), v)):
            if all(g.has_edge(v, w) for w in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def _colourable(g: Graph, k: int) -> bool:
    """DSATUR-ordered backtracking test for a proper k-colouring."""
    colour = [-1] * g.n

    def pick() -> int:
        best, key = -1, None
        for v in range(g.n):
            if colour[v] >= 0:
                continue
            sat = len({colour[w] for w in g.adj[v] if colour[w] >= 0})
            kv = (sat, g.degree(v), -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def rec(done: int, used: int) -> bool:
        if done == g.n:
            return True
        v = pick()
        forbidden = {colour[w] for w in g.adj[v]}
        # symmetry: at most one fresh colour is tried
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colour[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
            colour[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    if g.n > cap:
        raise TooLarge(f"chromatic number search capped at n={cap}, graph has {g.n} vertices")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    lo, hi = _clique_lower(g), _greedy_upper(g)
    for k in range(lo, hi):
        if _colourable(g, k):
            return k
    return hi


# --- enumeration --------------------------------------------------------------

def enumerate_proper_colourings(g: Graph, c: int, cap: int = ENUMERATION_CAP) -> Iterator[ProperColouring]:
    """Every partition of V(g) into exactly c independent non-empty classes.

    Vertices are placed in index order; a vertex may open a new class only
    after all earlier classes exist, so classes come out sorted by their
    smallest vertex and each set partition appears once.
    """
    if g.n > cap:
        raise TooLarge(f"colouring enumeration capped at n={cap}, graph has {g.n} vertices")
    n = g.n
    classes: list[list[int]] = []

    def rec(v: int) -> Iterator[ProperColouring]:
        if n - v < c - len(classes):
            return
        if v == n:
            if len(classes) == c:
                yield ProperColouring(tuple(tuple(x) for x in classes))
            return
        nbrs = g.adj[v]
        for cls in classes:
            if any(w in nbrs for w in cls):
                continue
            cls.append(v)
            yield from rec(v + 1)
            cls.pop()
        if len(classes) < c:
            classes.append([v])
            yield from rec(v + 1)
            classes.pop()

    yield from rec(0)


# --- parity obstructions ------------------------------------------------------

def _power_of_two_exponent(x: int) -> int | None:
    if x >= 1 and x & (x - 1) == 0:
        return x.bit_length() - 1
    return None


def parity_obstructed(spec: GroupSpec, t: int, c: int) -> bool:
    """True when ``t`` odd classes (out of ``c``) cannot get distinct group values.

    The sum of all weighted degrees lies in 2G, which rules out t in
    {2, h-2} for (Z2)^q with q >= 2 and t = h when h = 2 mod 4.
    """
    h = spec.order
    if h % 2:
        return False
    if spec.is_elementary_2 and h >= 4 and t in (2, h - 2):
        return True
    return h % 4 == 2 and t == h == c


def is_ugly(g: Graph, cap: int = ENUMERATION_CAP) -> bool:
    """Connected g (n >= 3) is ugly when every chi-colouring has a forbidden parity profile."""
    if g.n < 3:
        raise ColouringError("ugliness is defined for connected graphs of order >= 3")
    if not is_connected(g):
        raise ColouringError("ugliness is defined for connected graphs")
    chi = chromatic_number(g)
    q = _power_of_two_exponent(chi)
    if chi % 4 == 2:
        forbidden = {chi}
    elif q is not None and q >= 2:
        forbidden = {2, chi - 2}
    else:
        return False
    return all(col.t in forbidden for col in enumerate_proper_colourings(g, chi, cap))


def ugly_reason(g: Graph) -> str:
    chi = chromatic_number(g)
    if chi == 2:
        return "bipartition parts both odd"
    if chi % 4 == 2:
        return f"every proper {chi}-colouring has all classes odd"
    return f"every proper {chi}-colouring has exactly 2 or {chi - 2} odd classes"


def select_colouring(g: Graph, spec: GroupSpec, cap: int = ENUMERATION_CAP) -> ProperColouring:
    """First chi-colouring whose parity profile the group can realise, odd classes first."""
    if not is_connected(g):
        raise ColouringError("select_colouring expects a connected graph")
    chi = chromatic_number(g)
    if spec.order < chi:
        raise ColouringError(f"group order {spec.order} below chromatic number {chi}")
    for col in enumerate_proper_colourings(g, chi, cap):
        if not parity_obstructed(spec, col.t, col.c):
            return col.odd_first()
    raise UglyObstruction(
        f"no proper {chi}-colouring has a parity profile realisable in {spec!r} (graph is ugly)"
    )


def graph_chromatic_number(g: Graph) -> int:
    """chi of a possibly disconnected graph, computed per component."""
    best = 0
    for comp in components(g):
        sub, _ = g.subgraph(comp)
        best = max(best, chromatic_number(sub))
    return best
