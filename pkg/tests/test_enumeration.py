"""Orderly enumeration and canonical forms vs brute-force labelings."""

import random

import numpy as np
import pytest

from degpath import (
    GraphError,
    are_isomorphic,
    build_graph,
    canonical_form,
    complement,
    complete_bipartite,
    enumerate_graphs,
    half_graph,
)
from degpath.canon import code_blocks, code_of_graph, graph_from_code, level_codes
from degpath import _kernels

from conftest import brute_min_code, relabel

# number of isomorphism classes of simple graphs on 1..8 vertices
CENSUS = [1, 2, 4, 11, 34, 156, 1044, 12346]


def test_census_small_orders():
    for v, expect in enumerate(CENSUS, start=1):
        assert enumerate_graphs(v) == expect


def test_enumeration_matches_labeled_bruteforce():
    """Distinct canonical codes over ALL labeled graphs equal the
    enumerated codes, exactly, for orders 2..6."""
    for v in range(2, 7):
        labeled = np.unique(_kernels.all_labeled_min_codes(v))
        enumerated = level_codes(v)
        assert np.array_equal(np.sort(enumerated), labeled)


def test_canonical_form_is_brute_force_minimum():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        code = rng.randrange(1 << (n * (n - 1) // 2))
        g = graph_from_code(code, n)
        assert canonical_form(g).code == brute_min_code(g)


def test_canonical_form_constant_on_isomorphism_class():
    rng = random.Random(5)
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    base = canonical_form(c4)
    for _ in range(10):
        perm = list(range(4))
        rng.shuffle(perm)
        assert canonical_form(relabel(c4, perm)) == base


def test_canonical_form_separates_classes():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    k13 = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(p4) != canonical_form(k13)
    assert not are_isomorphic(p4, k13)


def test_are_isomorphic_examples():
    # complement of K_2 + K_3 (disjoint) is K_{2,3}
    k2k3 = build_graph(5, [(0, 1), (2, 3), (2, 4), (3, 4)])
    assert are_isomorphic(complement(k2k3), complete_bipartite(2, 3))
    assert are_isomorphic(half_graph(2), build_graph(4, [(0, 2), (0, 3), (1, 3)]))
    assert not are_isomorphic(complete_bipartite(2, 3),
                              build_graph(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert not are_isomorphic(build_graph(3, []), build_graph(4, []))


def test_edge_range_filter_matches_postfilter():
    for v in (5, 6):
        for lo, hi in ((0, 3), (4, 7), (5, 5)):
            direct = enumerate_graphs(v, edge_range=(lo, hi))
            seen = []
            enumerate_graphs(v, visitor=seen.append)
            assert direct == sum(1 for g in seen if lo <= g.edge_count() <= hi)


def test_visitor_graphs_are_canonical_and_deterministic():
    first, second = [], []
    enumerate_graphs(5, visitor=first.append)
    enumerate_graphs(5, visitor=second.append)
    assert first == second
    codes = [code_of_graph(g) for g in first]
    assert codes == sorted(codes)
    for g in first[::7]:
        assert canonical_form(g).code == code_of_graph(g)


def test_code_blocks_cover_level():
    total = sum(b.shape[0] for b in code_blocks(7))
    assert total == 1044


def test_rejects_out_of_range_orders():
    with pytest.raises(GraphError):
        enumerate_graphs(12)
    with pytest.raises(GraphError):
        enumerate_graphs(0)
    with pytest.raises(GraphError):
        canonical_form(build_graph(12, []))
    with pytest.raises(GraphError):
        enumerate_graphs(6, edge_range=(5, 200))


def test_degree_histogram_is_isomorphism_invariant_sample():
    seen = []
    enumerate_graphs(6, visitor=seen.append)
    rng = random.Random(3)
    for g in seen[::50]:
        perm = list(range(6))
        rng.shuffle(perm)
        assert are_isomorphic(g, relabel(g, perm))
