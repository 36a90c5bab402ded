"""Degree-sum maximization: closed forms vs exhaustive oracles."""

import pytest

from degpath import (
    GraphError,
    LambdaInstance,
    appendix_split,
    build_graph,
    complete_bipartite,
    domain_grid,
    half_graph,
    lambda_bruteforce,
    lambda_closed,
    lambda_naive,
)
from degpath.graphs import bits
from degpath.lambdaopt import DomainError


def test_closed_form_cases():
    inst1 = LambdaInstance(6, 9, 7, 5)
    assert inst1.case == 1 and lambda_closed(inst1) == 40
    inst2 = LambdaInstance(6, 9, 4, 7)
    assert inst2.case == 2 and lambda_closed(inst2) == 26
    inst3 = LambdaInstance(6, 9, 5, 6)
    assert inst3.case == 3 and lambda_closed(inst3) == 31


def test_bruteforce_agrees_on_the_three_named_cases():
    for args, expect in (((6, 9, 7, 5), 40), ((6, 9, 4, 7), 26),
                         ((6, 9, 5, 6), 31)):
        assert lambda_bruteforce(LambdaInstance(*args)) == expect


def test_bruteforce_empty_sequences():
    # Delta = 2n-1 = 11 and |B| = 11 leave both sequences empty
    assert lambda_bruteforce(LambdaInstance(6, 11, 5, 11)) == 0
    assert lambda_closed(LambdaInstance(6, 11, 5, 11)) == 0


def test_domain_validation():
    with pytest.raises(DomainError):
        LambdaInstance(5, 8, 3, 4)      # n < 6
    with pytest.raises(DomainError):
        LambdaInstance(6, 8, 3, 5)      # Delta < n+3
    with pytest.raises(DomainError):
        LambdaInstance(6, 12, 3, 4)     # Delta > 2n-1
    with pytest.raises(DomainError):
        LambdaInstance(6, 9, 2, 5)      # beta < 3
    with pytest.raises(DomainError):
        LambdaInstance(6, 9, 8, 5)      # beta > Delta-2
    with pytest.raises(DomainError):
        LambdaInstance(6, 9, 5, 4)      # |B| < 2n-Delta+2
    with pytest.raises(DomainError):
        LambdaInstance(6, 9, 5, 10)     # |B| > Delta


def test_case_conditions_partition_the_domain():
    for inst in domain_grid([6, 7, 8]):
        c1 = inst.b_size <= inst.beta
        c2 = inst.b_size > inst.beta and inst.delta + inst.b_size - 2 * inst.n >= inst.beta
        c3 = inst.b_size > inst.beta and inst.delta + inst.b_size - 2 * inst.n <= inst.beta - 1
        assert c1 + c2 + c3 == 1
        assert inst.case == (1 if c1 else 2 if c2 else 3)


def test_closed_equals_bruteforce_on_the_n6_grid():
    insts = domain_grid([6])
    assert len(insts) > 100
    for inst in insts:
        assert lambda_closed(inst) == lambda_bruteforce(inst), inst


def test_reduced_oracle_matches_fully_naive_enumeration():
    """The structured brute force agrees with raw sequence enumeration on
    every n=6 instance small enough to enumerate naively."""
    checked = 0
    for inst in domain_grid([6]):
        if inst.size_a + inst.size_b > 9:
            continue
        naive = lambda_naive(inst.size_a, inst.size_b, inst.delta, inst.beta)
        assert lambda_bruteforce(inst) == naive, inst
        checked += 1
    assert checked > 50


def test_monotone_in_b_size_within_case1():
    for inst in domain_grid([6, 7]):
        if inst.case != 1 or inst.b_size + 1 > inst.beta:
            continue
        nxt = LambdaInstance(inst.n, inst.delta, inst.beta, inst.b_size + 1)
        assert lambda_closed(nxt) <= lambda_closed(inst)


def test_appendix_split_examples():
    # K_{3,5}: order 8, n = 4, Delta = 5, threshold 2n - Delta + 2 = 5
    g = complete_bipartite(3, 5)
    a_mask, b_mask = appendix_split(g, 0)
    assert a_mask == 0 and b_mask.bit_count() == 5
    # star K_{1,5}: order 6, n = 3, Delta = 5, threshold 3; all leaves low
    star = build_graph(6, [(0, i) for i in range(1, 6)])
    a_mask, b_mask = appendix_split(star, 0)
    assert a_mask == 0 and bits(b_mask) == [1, 2, 3, 4, 5]
    # half graph: vertex n-1 has degree n+1... use the max-degree vertex
    h = half_graph(3)
    deltas = [h.degree(i) for i in range(6)]
    v0 = deltas.index(max(deltas))
    # all degrees are at most 3, below the threshold 2n - Delta + 2 = 5
    a_mask, b_mask = appendix_split(h, v0)
    assert a_mask == 0 and b_mask == h.rows[v0]


def test_appendix_split_errors():
    with pytest.raises(GraphError):
        appendix_split(complete_bipartite(2, 3), 0)   # odd order
    with pytest.raises(GraphError):
        appendix_split(complete_bipartite(2, 4), 2)   # not max degree
