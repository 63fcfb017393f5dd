import pytest

from groupsum.abelian import GroupSpec
from groupsum.colouring import (ColouringError, ProperColouring, TooLarge, UglyObstruction,
                                chromatic_number, enumerate_proper_colourings, is_ugly,
                                parity_obstructed, select_colouring)
from groupsum.corpus import connected_catalogue
from groupsum.graph import (Graph, complete, complete_bipartite, cycle, gnp, path, petersen)
from groupsum.oracle import brute_chromatic_number


def test_chromatic_examples():
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(complete(7)) == 7
    assert chromatic_number(Graph(4)) == 1


def test_chromatic_matches_partition_oracle():
    for g in connected_catalogue(6):
        assert chromatic_number(g) == brute_chromatic_number(g)


def test_chromatic_cap():
    with pytest.raises(TooLarge):
        chromatic_number(path(31))
    assert chromatic_number(gnp(30, 0.3, seed=1)) >= 3


def test_enumeration_examples():
    assert len(list(enumerate_proper_colourings(complete(4), 4))) == 1
    assert len(list(enumerate_proper_colourings(cycle(6), 2))) == 1
    (col,) = enumerate_proper_colourings(path(3), 2)
    assert col.classes == ((0, 2), (1,))


def _set_partition_colourings(g, c):
    # oracle: raw assignment scan, quotiented to set partitions
    import itertools
    seen = set()
    for assign in itertools.product(range(c), repeat=g.n):
        if len(set(assign)) != c or any(assign[u] == assign[v] for u, v in g.edges):
            continue
        seen.add(frozenset(frozenset(v for v in range(g.n) if assign[v] == b) for b in range(c)))
    return seen


@pytest.mark.parametrize("g", [cycle(5), petersen(), complete_bipartite(2, 3), gnp(7, 0.5, seed=2)], ids=repr)
def test_enumeration_complete_and_distinct(g):
    if g.n > 8:
        g, _ = g.subgraph(range(7))
    chi = chromatic_number(g)
    got = list(enumerate_proper_colourings(g, chi))
    for col in got:
        col.check(g)
    as_sets = [frozenset(frozenset(c) for c in col.classes) for col in got]
    assert len(set(as_sets)) == len(as_sets)
    assert set(as_sets) == _set_partition_colourings(g, chi)


def test_enumeration_cap():
    with pytest.raises(TooLarge):
        next(enumerate_proper_colourings(path(17), 2))


def test_ugly_examples():
    assert is_ugly(cycle(6))
    assert not is_ugly(complete(4))
    assert not is_ugly(cycle(5))
    assert is_ugly(complete(6))
    assert is_ugly(complete_bipartite(1, 3))
    assert not is_ugly(cycle(4))
    with pytest.raises(ColouringError):
        is_ugly(path(2))


def test_parity_obstructions():
    e8 = GroupSpec((2, 2, 2))
    assert parity_obstructed(e8, 2, 5) and parity_obstructed(e8, 6, 8)
    assert not parity_obstructed(e8, 4, 8)
    assert parity_obstructed(GroupSpec.parse("6"), 6, 6)
    assert not parity_obstructed(GroupSpec.parse("6"), 6, 7)
    assert not parity_obstructed(GroupSpec((2,)), 0, 2)
    assert parity_obstructed(GroupSpec((2,)), 2, 2)
    assert not parity_obstructed(GroupSpec((4,)), 2, 4)
    assert not parity_obstructed(GroupSpec((5,)), 5, 5)


def test_select_colouring_examples():
    col = select_colouring(complete(4), GroupSpec((2, 2)))
    assert col.t == 4
    col = select_colouring(cycle(5), GroupSpec((3,)))
    sizes = [len(c) for c in col.classes]
    assert sizes == sorted(sizes, key=lambda s: s % 2 == 0)
    with pytest.raises(UglyObstruction):
        select_colouring(cycle(6), GroupSpec((2,)))


def test_select_colouring_avoids_bad_profiles():
    g = complete_bipartite(3, 3)
    # any 2-colouring of K3,3 has both classes odd; Z2 cannot, Z3 is above chi
    with pytest.raises(UglyObstruction):
        select_colouring(g, GroupSpec((2,)))
    for g in connected_catalogue(6):
        chi = chromatic_number(g)
        from groupsum.abelian import enumerate_abelian_groups
        for spec in enumerate_abelian_groups(chi):
            try:
                col = select_colouring(g, spec)
            except UglyObstruction:
                assert is_ugly(g)
                continue
            col.check(g)
            assert not parity_obstructed(spec, col.t, col.c)


def test_colouring_check_rejects_bad_partitions():
    with pytest.raises(ColouringError):
        ProperColouring.from_classes([[0, 1], [2]]).check(path(3))
    with pytest.raises(ColouringError):
        ProperColouring.from_classes([[0], [1]]).check(path(3))
