"""Shared independent oracles for the test suite.

These deliberately use the dumbest correct method available (permutation
scans, full labeled enumeration) so they share no code path with the
implementations they check.
"""

from itertools import permutations

import pytest

from degpath import Graph


def oracle_witness(g: Graph, ell: int):
    """Lexicographically smallest equal-degree path of length ell by
    scanning all vertex sequences (itertools yields them in lex order)."""
    if ell >= g.order:
        return None
    for seq in permutations(range(g.order), ell + 1):
        if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])) \
                and g.degree(seq[0]) == g.degree(seq[-1]):
            return seq
    return None


def brute_min_code(g: Graph) -> int:
    """Minimal column-major upper-triangle bit string over all labelings."""
    best = None
    for perm in permutations(range(g.order)):
        code = 0
        for j in range(1, g.order):
            for i in range(j):
                code = code << 1 | (1 if g.has_edge(perm[i], perm[j]) else 0)
        if best is None or code < best:
            best = code
    return best


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex i renamed to perm[i]."""
    from degpath import build_graph

    return build_graph(g.order, [(perm[a], perm[b]) for a, b in g.edges()])


@pytest.fixture(scope="session")
def small_classes():
    """One representative per isomorphism class for orders 1..7."""
    from degpath import enumerate_graphs

    out = {}
    for v in range(1, 8):
        reps = []
        enumerate_graphs(v, visitor=reps.append)
        out[v] = reps
    return out
