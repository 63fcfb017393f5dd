import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupsum.graph import (EVEN, ODD, Graph, GraphError, NotConnected, ParityInfeasible, ParseError,
                            bipartition, complete, complete_bipartite, components, cycle,
                            disjoint_union, generate, gnp, parse_graph, path, shortest_parity_walk,
                            write_graph)


def test_parse_examples():
    assert parse_graph("3 2\n0 1\n1 2") == path(3)
    assert parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3") == complete(4)
    assert parse_graph("# a comment\n\n3 2\n# mid\n1 0\n2 1\n") == path(3)


@pytest.mark.parametrize("text,line,frag", [
    ("3 1\n0 0", 2, "self-loop"),
    ("3 1\n0 3", 2, "out of range"),
    ("3 2\n0 1\n1 0", 3, "duplicate"),
    ("3\n0 1", 1, "header"),
    ("3 2\n0 1", 2, "announces 2"),
    ("3 1\n0 x", 2, "integers"),
    ("", 1, "missing"),
])
def test_parse_errors_carry_line_numbers(text, line, frag):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.lineno == line
    assert frag in str(info.value)


def test_write_round_trip():
    g = gnp(9, 0.5, seed=3)
    assert parse_graph(write_graph(g)) == g


def test_generators():
    assert generate("cycle", [6]) == cycle(6)
    assert generate("complete_bipartite", [1, 3]) == Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    u = generate("disjoint_union", [("complete", 8), ("complete", 6)])
    assert u.n == 14 and [len(c) for c in components(u)] == [8, 6]
    assert generate("gnp", [10, 0.4], seed=5) == generate("gnp", [10, 0.4], seed=5)
    with pytest.raises(GraphError):
        generate("cycle", [2])
    with pytest.raises(GraphError):
        generate("nope", [])
    with pytest.raises(GraphError):
        Graph(3, frozenset({(1, 1)}))


def test_components_examples():
    assert [len(c) for c in components(disjoint_union([cycle(6), complete(3)]))] == [6, 3]
    assert components(Graph(3)) == [[0], [1], [2]]
    assert components(complete(4)) == [[0, 1, 2, 3]]


def test_bipartition_examples():
    a, b = bipartition(cycle(6))
    assert (len(a), len(b)) == (3, 3) and 0 in a
    assert bipartition(cycle(5)) is None
    a, b = bipartition(complete_bipartite(1, 3))
    assert (len(a), len(b)) == (1, 3)


def _has_odd_cycle(g):
    # odd closed walk of length <= n exists iff some odd cycle exists
    for s in range(g.n):
        reach = {s}
        for step in range(1, g.n + 1):
            reach = {w for v in reach for w in g.adj[v]}
            if step % 2 and s in reach:
                return True
    return False


connected_graphs = st.integers(3, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.permutations(range(n)),
    st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n),
)).map(lambda t: Graph.from_edges(
    t[0],
    [(t[1][i], t[1][i + 1]) for i in range(t[0] - 1)] + [(u, v) for u, v in t[2] if u != v]))


@settings(max_examples=150)
@given(connected_graphs)
def test_bipartition_iff_no_odd_cycle(g):
    parts = bipartition(g)
    assert (parts is None) == _has_odd_cycle(g)
    if parts is not None:
        side = {v: i for i, p in enumerate(parts) for v in p}
        assert all(side[u] != side[v] for u, v in g.edges)


def test_walk_examples():
    w = shortest_parity_walk(path(4), 0, 3, EVEN)
    assert w.vertices == (0, 1, 2, 3) and w.parity == EVEN
    w = shortest_parity_walk(cycle(5), 0, 1, ODD)
    assert w.vertices == (0, 4, 3, 2, 1)
    with pytest.raises(ParityInfeasible):
        shortest_parity_walk(cycle(6), 0, 1, ODD)
    with pytest.raises(NotConnected):
        shortest_parity_walk(disjoint_union([path(3), path(3)]), 0, 4, ODD)
    with pytest.raises(GraphError):
        shortest_parity_walk(path(3), 1, 1, ODD)


def brute_walk_lengths(g, x1, x2, max_edges):
    """Enumerate every walk from x1 with up to max_edges edges; shortest edge count per parity."""
    best = {}
    frontier = {x1}
    for length in range(1, max_edges + 1):
        frontier = {w for v in frontier for w in g.adj[v]}
        if x2 in frontier and length % 2 not in best:
            best[length % 2] = length
    return best


@settings(max_examples=120, deadline=None)
@given(connected_graphs, st.data())
def test_parity_walk_matches_walk_enumeration(g, data):
    x1 = data.draw(st.integers(0, g.n - 1))
    x2 = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x1))
    best = brute_walk_lengths(g, x1, x2, 2 * g.n)
    for parity in (EVEN, ODD):
        edge_par = 1 if parity == EVEN else 0
        if edge_par in best:
            w = shortest_parity_walk(g, x1, x2, parity)
            w.check(g)
            assert w.parity == parity
            assert len(w.vertices) - 1 == best[edge_par]
            assert w.vertices[0] == x1 and w.vertices[-1] == x2
        else:
            with pytest.raises(ParityInfeasible):
                shortest_parity_walk(g, x1, x2, parity)


def test_walk_is_lexicographically_smallest():
    g = cycle(6)
    # 0 -> 3 has two shortest paths; the smaller goes through 1
    assert shortest_parity_walk(g, 0, 3, EVEN).vertices == (0, 1, 2, 3)
    # brute force over all shortest walks in K4
    k4 = complete(4)
    walks = [w for w in itertools.product(range(4), repeat=3)
             if w[0] == 0 and w[-1] == 1 and all(k4.has_edge(a, b) for a, b in zip(w, w[1:]))]
    assert shortest_parity_walk(k4, 0, 1, ODD).vertices == min(walks)
