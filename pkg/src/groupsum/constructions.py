"""Constructive vertex-G-colouring labellings and the group sum chromatic number.

Each connected component is labelled on its own (weighted degrees never
cross components).  Within a component the labelling is assembled from the
walk primitives in :mod:`groupsum.labelling`: a proper colouring is chosen,
every colour class is assigned a distinct group element, and the class is
raised to that element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import (GroupElement, GroupSpec, disjoint_inverse_pairs, enumerate_abelian_groups,
                      involutions, non_involution, zero_sum_involution_subset)
from .colouring import (ColouringError, ProperColouring, UglyObstruction, chromatic_number,
                        enumerate_proper_colourings, graph_chromatic_number, is_ugly,
                        parity_obstructed, select_colouring, ugly_reason)
from .graph import Graph, bipartition, components, is_connected
from .labelling import (Certificate, EdgeLabelling, broadcast_even_class, broadcast_odd_pair,
                        phi_even, phi_odd, verify)


class DomainError(ValueError):
    """Input outside the theory's domain (e.g. a component of order < 3)."""


class ImpossibleLabelling(ValueError):
    """No vertex-G-colouring labelling exists for this graph and group."""


class ConstructionBug(AssertionError):
    pass


@dataclass(frozen=True)
class Impossible:
    spec: GroupSpec
    reason: str

    @property
    def valid(self) -> bool:
        return False


# --- helpers -----------------------------------------------------------------

def _require_component(c: Graph) -> None:
    if c.n < 3:
        raise DomainError(f"component of order {c.n} < 3 (no components of order less than 3 allowed)")
    if not is_connected(c):
        raise DomainError("expected a connected component")


class _Supply:
    """Group elements handed out in lexicographic order, each at most once."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.used: set[GroupElement] = set()

    def claim(self, *items: GroupElement) -> None:
        for a in items:
            if a in self.used:
                raise ConstructionBug(f"element {a} assigned twice")
            self.used.add(a)

    def next(self, nonzero: bool = False) -> GroupElement:
        for a in self.spec.elements:
            if a in self.used or (nonzero and a == self.spec.zero):
                continue
            self.used.add(a)
            return a
        raise ConstructionBug("ran out of group elements")


def _inverse_pairs_avoiding(spec: GroupSpec, m: int, avoid: set) -> list[tuple[GroupElement, GroupElement]]:
    pairs = []
    for a, b in disjoint_inverse_pairs(spec, (spec.order - (1 << spec.two_rank)) // 2):
        if len(pairs) == m:
            break
        if a in avoid or b in avoid:
            continue
        pairs.append((a, b))
    if len(pairs) < m:
        raise ConstructionBug(f"needed {m} inverse pairs outside {sorted(avoid)}")
    return pairs


def _pair_odd_classes(f: EdgeLabelling, classes: Sequence[Sequence[int]], supply: _Supply) -> None:
    """Phi(V_{2j-1}, V_{2j}) = (a_j, -a_j) over consecutive classes."""
    pairs = disjoint_inverse_pairs(f.spec, len(classes) // 2)
    for (a, b), vj, vk in zip(pairs, classes[::2], classes[1::2]):
        supply.claim(a, b)
        broadcast_odd_pair(f, vj, vk, a)


def _fill_even(f: EdgeLabelling, classes: Sequence[Sequence[int]], supply: _Supply, nonzero: bool = False) -> None:
    for cls in classes:
        if len(cls) % 2:
            raise ConstructionBug("odd class left for even-class broadcast")
        broadcast_even_class(f, cls, supply.next(nonzero))


def _involution_star(f: EdgeLabelling, reps: Sequence[int], values: Sequence[GroupElement]) -> None:
    """Give reps[j] weight values[j] when the values have order <= 2 and sum to 0.

    phi_odd(x_1, x_j) = i_j for j >= 2; x_1 collects the sum of the others,
    which equals i_1.
    """
    for x, i in zip(reps[1:], values[1:]):
        phi_odd(f, reps[0], x, i)


def _zero_sum_classes(f: EdgeLabelling, classes: Sequence[Sequence[int]], values: Sequence[GroupElement],
                      supply: _Supply) -> None:
    supply.claim(*values)
    reps = [min(c) for c in classes]
    _involution_star(f, reps, values)
    for cls, x, i in zip(classes, reps, values):
        broadcast_even_class(f, [v for v in cls if v != x], i)


# --- bipartite components ------------------------------------------------------

def _label_bipartite_any(c: Graph, spec: GroupSpec) -> EdgeLabelling:
    parts = bipartition(c)
    if parts is None:
        raise DomainError("component is not bipartite")
    f = EdgeLabelling(c, spec)
    even = [p for p in parts if len(p) % 2 == 0]
    if even:
        part = even[0]
        inv = involutions(spec)
        a = inv[0] if inv else next(x for x in spec.elements if x != spec.zero)
        for x, y in zip(part[::2], part[1::2]):
            phi_odd(f, x, y, a)
        return f

    big, small = (parts[0], parts[1]) if len(parts[0]) >= len(parts[1]) else (parts[1], parts[0])
    a = non_involution(spec)
    if a is not None:
        minus = spec.neg(a)
        x1, x2, x3 = big[:3]
        phi_odd(f, x1, x2, a)
        phi_odd(f, x1, x3, a)
        rest = big[3:]
        for x, y in zip(rest[::2], rest[1::2]):
            phi_odd(f, x, y, minus)
        return f
    if spec.order < 4:
        raise UglyObstruction(f"both bipartition parts are odd; {spec!r} cannot separate them")
    # elementary 2-group: split the larger side into three odd classes
    classes = [small, [big[0]], [big[1]], big[2:]]
    values = zero_sum_involution_subset(spec, 4)
    reps = [cls[0] for cls in classes]
    for x, i in zip(reps[1:], values[1:]):
        phi_even(f, reps[0], x, i)
    for cls, i in zip(classes, values):
        broadcast_even_class(f, cls[1:], i)
    return f


def label_bipartite(c: Graph, spec: GroupSpec) -> EdgeLabelling:
    """Connected bipartite component with a group of order 2 (some side even) or 3 (both sides odd)."""
    _require_component(c)
    parts = bipartition(c)
    if parts is None:
        raise DomainError("component is not bipartite")
    both_odd = all(len(p) % 2 for p in parts)
    want = 3 if both_odd else 2
    if spec.order != want:
        if both_odd and spec.order == 2:
            raise UglyObstruction("bipartition parts both odd: order 2 is impossible")
        raise ColouringError(
            f"bipartite component with parts {len(parts[0])},{len(parts[1])} takes order {want}, "
            f"got {spec.order}; use label_higher_order")
    return _label_bipartite_any(c, spec)


# --- non-bipartite components ------------------------------------------------------

def label_nonbipartite(c: Graph, spec: GroupSpec, colouring: ProperColouring | None = None) -> EdgeLabelling:
    """Label a connected non-bipartite component from a proper colouring.

    The colouring may use fewer classes than the group has elements.  Its
    odd classes come first; t counts them.
    """
    _require_component(c)
    if bipartition(c) is not None:
        raise DomainError("component is bipartite")
    if colouring is None:
        colouring = select_colouring(c, spec)
    colouring.check(c)
    col = colouring.odd_first()
    classes = [list(x) for x in col.classes]
    t, h = col.t, spec.order
    if col.c > h:
        raise ColouringError(f"{col.c} colour classes exceed group order {h}")
    if parity_obstructed(spec, t, col.c):
        raise UglyObstruction(f"{t} odd classes cannot be realised in {spec!r}")

    f = EdgeLabelling(c, spec)
    supply = _Supply(spec)
    zero = spec.zero
    odd, even = classes[:t], classes[t:]
    k = spec.two_rank

    if h % 2 or (k == 1 and 3 <= t < h):
        # inverse pairs on odd classes, 0 on a leftover odd class
        _pair_odd_classes(f, odd, supply)
        if t % 2:
            supply.claim(zero)
        _fill_even(f, even, supply)
    elif t <= 1:
        supply.claim(zero)
        _fill_even(f, classes[1:], supply, nonzero=True)
    elif t == 2:
        a1 = non_involution(spec)
        supply.claim(a1, spec.neg(a1))
        broadcast_odd_pair(f, odd[0], odd[1], a1)
        _fill_even(f, even, supply)
    elif k == 1:
        _case_all_odd_one_involution(f, classes, supply)
    elif t <= (1 << k) and t != (1 << k) - 2:
        _zero_sum_classes(f, odd, zero_sum_involution_subset(spec, t), supply)
        _fill_even(f, even, supply)
    elif t == (1 << k) - 2:
        a1 = non_involution(spec)
        supply.claim(a1, spec.neg(a1))
        broadcast_odd_pair(f, odd[t - 2], odd[t - 1], a1)
        _zero_sum_classes(f, odd[:t - 2], zero_sum_involution_subset(spec, t - 2), supply)
        _fill_even(f, even, supply)
    else:
        m = -(-(t - (1 << k)) // 2)
        rest = t - 2 * m
        _pair_odd_classes(f, odd[rest:], supply)
        _zero_sum_classes(f, odd[:rest], zero_sum_involution_subset(spec, rest), supply)
        _fill_even(f, even, supply)
    return f


def _case_all_odd_one_involution(f: EdgeLabelling, classes: list[list[int]], supply: _Supply) -> None:
    # every class odd, one involution i1 = 2 a1 with a1 of order 4
    spec = f.spec
    (i1,) = involutions(spec)
    a1 = next((a for a in spec.elements if spec.scale(2, a) == i1), None)
    if a1 is None:
        raise UglyObstruction(f"{spec!r} has no element of order 4")
    a3 = spec.scale(3, a1)
    sub = {spec.zero, a1, i1, a3}
    supply.claim(*sub)
    x1, x2, x3 = (min(cls) for cls in classes[:3])
    phi_even(f, x1, x2, i1)
    phi_even(f, x1, x3, a1)
    broadcast_even_class(f, [v for v in classes[0] if v != x1], a3)
    broadcast_even_class(f, [v for v in classes[1] if v != x2], i1)
    broadcast_even_class(f, [v for v in classes[2] if v != x3], a1)
    rest = classes[4:]
    pairs = _inverse_pairs_avoiding(spec, len(rest) // 2, sub)
    for (a, b), vj, vk in zip(pairs, rest[::2], rest[1::2]):
        supply.claim(a, b)
        broadcast_odd_pair(f, vj, vk, a)


# --- larger groups -------------------------------------------------------------

def _singleton_values(spec: GroupSpec, t: int) -> tuple[list[tuple[GroupElement, GroupElement]], list[GroupElement]]:
    """t distinct elements with zero sum: inverse pairs plus a zero-sum set of order <= 2 elements."""
    k = spec.two_rank
    avail = (spec.order - (1 << k)) // 2
    m = min(t // 2, avail)
    r = t - 2 * m
    if k >= 2 and r in (2, (1 << k) - 2):
        if m == 0:
            raise ImpossibleLabelling(f"{t} distinct elements of {spec!r} cannot sum to zero")
        m, r = m - 1, r + 2
    if r > 1 << k:
        raise ConstructionBug(f"{t} singletons exceed the supply of {spec!r}")
    if r <= 1:
        inv = [spec.zero] * r
    else:
        inv = zero_sum_involution_subset(spec, r)
    return disjoint_inverse_pairs(spec, m), inv


def _label_singletons(c: Graph, spec: GroupSpec) -> EdgeLabelling:
    f = EdgeLabelling(c, spec)
    pairs, inv = _singleton_values(spec, c.n)
    vs = list(range(c.n))
    for j, (a, _) in enumerate(pairs):
        phi_odd(f, vs[2 * j], vs[2 * j + 1], a)
    _involution_star(f, vs[2 * len(pairs):], inv)
    return f


def _split_off(col: list[list[int]], v: int) -> list[list[int]]:
    out = [[x for x in cls if x != v] for cls in col]
    return [cls for cls in out if cls] + [[v]]


def _recolour_for_parity(c: Graph, spec: GroupSpec) -> ProperColouring:
    """A proper colouring with at most |G| classes and a realisable parity profile.

    From each chi-colouring, vertices are moved into fresh singleton classes,
    lexicographically first eligible vertex first: one from an even class
    (t grows by 2) when possible, else one from an odd class of size >= 3
    (t unchanged, that class turns even).  If that fails, colourings with
    more classes are searched exhaustively.
    """
    h = spec.order
    chi = chromatic_number(c)
    for base in enumerate_proper_colourings(c, chi):
        cur = [list(x) for x in base.classes]
        while True:
            t = sum(len(x) % 2 for x in cur)
            if not parity_obstructed(spec, t, len(cur)):
                return ProperColouring.from_classes(cur)
            if len(cur) >= h:
                break
            movable = sorted(v for x in cur if len(x) % 2 == 0 for v in x)
            if not movable:
                movable = sorted(v for x in cur if len(x) >= 3 for v in x)
            if not movable:
                break
            cur = _split_off(cur, movable[0])
    for extra in range(chi + 1, min(h, c.n) + 1):
        for col in enumerate_proper_colourings(c, extra):
            if not parity_obstructed(spec, col.t, col.c):
                return col
    raise ImpossibleLabelling(f"no proper colouring with at most {h} classes has a realisable parity profile")


def label_higher_order(c: Graph, spec: GroupSpec) -> EdgeLabelling:
    """Label a connected component with a group of order above its group sum chromatic number."""
    _require_component(c)
    h = spec.order
    base = component_chi_sum_g(c)
    if h <= base:
        raise ColouringError(f"group order {h} is not above chi_sum_g = {base}")
    if spec.is_elementary_2 and c.is_complete() and c.n == h - 2:
        raise ImpossibleLabelling(
            f"K_{c.n} with {spec!r}: the weighted degrees would sum to a+b and to 0, "
            "so a+b=0 and a=b, a contradiction")
    if bipartition(c) is not None:
        return _label_bipartite_any(c, spec)
    if h % 2:
        return label_nonbipartite(c, spec, next(enumerate_proper_colourings(c, chromatic_number(c))))
    if c.n > h or (spec.is_elementary_2 and c.n == h - 2):
        return label_nonbipartite(c, spec, _recolour_for_parity(c, spec))
    singletons = ProperColouring(tuple((v,) for v in range(c.n)))
    if spec.two_rank == 1 and c.n == h:
        if parity_obstructed(spec, c.n, c.n):
            return label_nonbipartite(c, spec, _recolour_for_parity(c, spec))
        return label_nonbipartite(c, spec, singletons)
    return _label_singletons(c, spec)


# --- top level -----------------------------------------------------------------------

def _component_graphs(g: Graph) -> list[tuple[Graph, list[int]]]:
    out = []
    for comp in components(g):
        sub, old = g.subgraph(comp)
        if sub.n < 3:
            raise DomainError(
                f"component {comp} has order {sub.n}; no components of order less than 3 allowed")
        out.append((sub, old))
    return out


def component_chi_sum_g(c: Graph) -> int:
    chi = chromatic_number(c)
    return chi + 1 if is_ugly(c) else chi


def _is_kq_minus_2(c: Graph, chi: int) -> bool:
    return c.is_complete() and c.n == chi - 2


def _pow2_at_least_4(x: int) -> bool:
    return x >= 4 and x & (x - 1) == 0


def chi_sum_g_explained(g: Graph) -> tuple[int, str]:
    comps = _component_graphs(g)
    chis = [chromatic_number(c) for c, _ in comps]
    chi = max(chis)
    for (c, _), cc in zip(comps, chis):
        if cc == chi and is_ugly(c):
            return chi + 1, f"ugly component: {ugly_reason(c)}"
    if _pow2_at_least_4(chi):
        for c, old in comps:
            if _is_kq_minus_2(c, chi):
                return chi + 1, f"component isomorphic to K_{chi - 2} while chromatic number is {chi}"
    return chi, "chromatic number"


def chi_sum_g(g: Graph) -> int:
    """Smallest s such that every Abelian group of order s admits a vertex-colouring labelling."""
    return chi_sum_g_explained(g)[0]


def k_minus_two_exception(g: Graph, spec: GroupSpec) -> bool:
    h = spec.order
    return spec.is_elementary_2 and any(c.is_complete() and c.n == h - 2 for c, _ in _component_graphs(g))


def can_label(g: Graph, spec: GroupSpec) -> bool:
    """Whether the theory guarantees a labelling: order at least chi_sum_g and no (Z2)^q / K_{h-2} clash."""
    return spec.order >= chi_sum_g(g) and not k_minus_two_exception(g, spec)


def label_component(c: Graph, spec: GroupSpec) -> EdgeLabelling:
    """Dispatch a connected component to the matching construction.

    Raises ImpossibleLabelling when the component admits no labelling over
    this particular group.
    """
    _require_component(c)
    h = spec.order
    chi = chromatic_number(c)
    if h < chi:
        raise ImpossibleLabelling(f"group order {h} is below the chromatic number {chi}")
    try:
        if bipartition(c) is not None:
            if h == 2 or (h == 3 and all(len(p) % 2 for p in bipartition(c))):
                return label_bipartite(c, spec)
            return label_higher_order(c, spec)
        if h == chi:
            return label_nonbipartite(c, spec)
        if h == chi + 1 and is_ugly(c):
            return label_nonbipartite(c, spec)
        return label_higher_order(c, spec)
    except UglyObstruction as exc:
        raise ImpossibleLabelling(str(exc)) from exc


def construct(g: Graph, spec: GroupSpec) -> EdgeLabelling:
    """Vertex-G-colouring labelling of the whole graph, built per component and verified."""
    if spec.order < 2:
        raise DomainError("the trivial group cannot label anything")
    f = EdgeLabelling(g, spec)
    for sub, old in _component_graphs(g):
        part = label_component(sub, spec)
        for (u, v), a in part.label.items():
            f.add_to(old[u], old[v], a)
    cert = verify(g, f)
    if not cert.valid:
        raise ConstructionBug(f"construction over {spec!r} produced conflicts on {list(cert.violations)}")
    return f


def label(g: Graph, spec: GroupSpec) -> Certificate:
    return verify(g, construct(g, spec))


def certify(g: Graph, s: int) -> list[Certificate | Impossible]:
    """Certificates (or impossibility records) for every Abelian group of order s."""
    out: list[Certificate | Impossible] = []
    for spec in enumerate_abelian_groups(s):
        expected = can_label(g, spec)
        try:
            cert = label(g, spec)
        except ImpossibleLabelling as exc:
            if expected:
                raise ConstructionBug(f"theory guarantees a labelling over {spec!r}: {exc}") from exc
            out.append(Impossible(spec, str(exc)))
            continue
        out.append(cert)
    return out


def graph_summary(g: Graph) -> dict:
    value, reason = chi_sum_g_explained(g)
    return {"chi": graph_chromatic_number(g), "chi_sum_g": value, "reason": reason}
