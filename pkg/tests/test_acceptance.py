"""Acceptance criteria, one test each, with their wall-clock limits.

A PASS/FAIL line per criterion is printed in the terminal summary
(see conftest.py).
"""

import time

import pytest

import groupsum.constructions as constructions
from groupsum.abelian import (GroupSpec, NoSuchSubset, enumerate_abelian_groups, involutions,
                              zero_sum_involution_subset)
from groupsum.colouring import is_ugly
from groupsum.constructions import (DomainError, Impossible, ImpossibleLabelling, can_label, certify,
                                    chi_sum_g, construct)
from groupsum.corpus import DICHOTOMY, connected_catalogue, random_connected, small_corpus
from groupsum.graph import complete, cycle
from groupsum.labelling import verify, weighted_degrees
from groupsum.oracle import brute_chi_sum, brute_exists_labelling, brute_ugly, brute_zero_sum_subsets


def _constructs(g, spec):
    try:
        return verify(g, construct(g, spec)).valid
    except (ImpossibleLabelling, DomainError):
        return False


@pytest.mark.criterion(1, "dichotomy table")
def test_criterion_1_dichotomy_table():
    start = time.perf_counter()
    got = {name: chi_sum_g(make()) for name, (make, _) in DICHOTOMY.items()}
    assert got == {name: expected for name, (_, expected) in DICHOTOMY.items()}
    assert brute_ugly(complete(6)) and brute_ugly(cycle(6))
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(2, "oracle equivalence")
def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    checked = 0
    for name, g in sorted(small_corpus().items()):
        if g.m > 8:
            continue
        for h in range(1, 5):
            for spec in enumerate_abelian_groups(h):
                brute = brute_exists_labelling(g, spec) is not None
                assert brute == _constructs(g, spec), (name, str(spec))
                checked += 1
    assert checked > 0
    for name in ["P3", "C4", "C5", "C6", "K1,3", "K4"]:
        g = DICHOTOMY[name][0]()
        assert brute_chi_sum(g) == chi_sum_g(g), name
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(3, "zero-sum involution subsets")
def test_criterion_3_zero_sum_subsets():
    start = time.perf_counter()
    for k in range(2, 6):
        spec = GroupSpec((2,) * k)
        pool = set(involutions(spec)) | {spec.zero}
        for r in range(0, 2**k + 1):
            expected = r not in (2, 2**k - 2)
            try:
                got = zero_sum_involution_subset(spec, r)
            except NoSuchSubset:
                got = None
            assert (got is not None) == expected == brute_zero_sum_subsets(k, r), (k, r)
            if got is not None:
                assert len(set(got)) == r and set(got) <= pool
                assert spec.total(got) == spec.zero
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(4, "higher-order sweep")
def test_criterion_4_higher_order_sweep():
    start = time.perf_counter()
    for name, g in sorted(small_corpus().items()):
        s = chi_sum_g(g)
        for h in range(s, s + 5):
            for spec in enumerate_abelian_groups(h):
                assert can_label(g, spec) == _constructs(g, spec), (name, str(spec))
            for item in certify(g, h):
                if not isinstance(item, Impossible):
                    assert item.valid and item.recheck().valid, (name, str(item.spec))
    z8, z4z2, e8 = certify(complete(6), 8)
    assert z8.spec == GroupSpec((8,)) and z8.valid
    assert z4z2.spec == GroupSpec((4, 2)) and z4z2.valid
    assert e8.spec == GroupSpec((2, 2, 2)) and isinstance(e8, Impossible)
    assert time.perf_counter() - start < 300


def _checked(op, moved):
    """Wrap a relabelling primitive; after each call compare degree deltas with the contract."""
    def wrapper(f, *args):
        before = weighted_degrees(f.graph, f)
        op(f, *args)
        after = weighted_degrees(f.graph, f)
        expected = {v: f.spec.zero for v in before}
        for v, d in moved(f.spec, *args).items():
            expected[v] = f.spec.add(expected[v], d)
        actual = {v: f.spec.sub(after[v], before[v]) for v in before}
        assert actual == expected, (op.__name__, args)
        _checked.calls += 1
    return wrapper


_checked.calls = 0


def _moved_even(spec, x1, x2, a):
    return {x1: a, x2: a}


def _moved_odd(spec, x1, x2, a):
    return {x1: a, x2: spec.neg(a)}


def _moved_class(spec, vertices, a):
    return {v: a for v in vertices}


def _moved_pair(spec, vj, vk, a):
    out = {v: a for v in vj}
    out.update({v: spec.neg(a) for v in vk})
    return out


@pytest.mark.criterion(5, "soundness on random graphs")
def test_criterion_5_soundness(monkeypatch):
    start = time.perf_counter()
    monkeypatch.setattr(constructions, "phi_even", _checked(constructions.phi_even, _moved_even))
    monkeypatch.setattr(constructions, "phi_odd", _checked(constructions.phi_odd, _moved_odd))
    monkeypatch.setattr(constructions, "broadcast_even_class",
                        _checked(constructions.broadcast_even_class, _moved_class))
    monkeypatch.setattr(constructions, "broadcast_odd_pair",
                        _checked(constructions.broadcast_odd_pair, _moved_pair))
    _checked.calls = 0
    graphs = random_connected(200, max_n=12, seed=2024)
    assert len(graphs) == 200
    for g in graphs:
        s = chi_sum_g(g)
        for spec in enumerate_abelian_groups(s):
            assert verify(g, construct(g, spec)).valid, (sorted(g.edges), str(spec))
    assert _checked.calls > 0
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(6, "ugliness agreement")
def test_criterion_6_ugliness_agreement():
    start = time.perf_counter()
    catalogue = connected_catalogue(7)
    assert len(catalogue) == 2 + 6 + 21 + 112 + 853
    for g in catalogue:
        assert is_ugly(g) == brute_ugly(g), sorted(g.edges)
    assert time.perf_counter() - start < 300
