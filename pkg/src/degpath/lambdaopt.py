"""Exact degree-sum maximization used in the even-order dichotomy argument.

Given half-order n, maximum degree Delta, largest repeated degree beta, and
the size of the low-degree part B of N(v0), the quantity lambda is the
maximum of the sum of two degree sequences:

  - a sequence of Delta - |B| distinct integers in {1, ..., Delta-1}, and
  - a sequence of 2n - 1 - Delta integers in {0, ..., Delta-1},

subject to no value greater than beta being used twice across both.  Closed
forms exist in three parameter cases; an exhaustive oracle validates them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .detect import is_property_free
from .graphs import Graph, GraphError, bits


class DomainError(ValueError):
    """Instance outside the standing assumptions of the maximization."""


@dataclass(frozen=True)
class LambdaInstance:
    """Parameters (n, Delta, beta, |B|) inside the standing domain."""

    n: int
    delta: int
    beta: int
    b_size: int

    def __post_init__(self):
        n, delta, beta, b = self.n, self.delta, self.beta, self.b_size
        if n < 6:
            raise DomainError(f"n={n} below 6")
        if not n + 3 <= delta <= 2 * n - 1:
            raise DomainError(f"Delta={delta} outside [n+3, 2n-1]")
        if not 3 <= beta <= delta - 2:
            raise DomainError(f"beta={beta} outside [3, Delta-2]")
        if not 2 * n - delta + 2 <= b <= delta:
            raise DomainError(f"|B|={b} outside [2n-Delta+2, Delta]")

    @property
    def size_a(self) -> int:
        return self.delta - self.b_size

    @property
    def size_b(self) -> int:
        return 2 * self.n - 1 - self.delta

    @property
    def case(self) -> int:
        if self.b_size <= self.beta:
            return 1
        if self.delta + self.b_size - 2 * self.n >= self.beta:
            return 2
        return 3


def _range_sum(lo: int, hi: int) -> int:
    """Sum of integers lo..hi inclusive (0 when empty)."""
    if lo > hi:
        return 0
    return (lo + hi) * (hi - lo + 1) // 2


def lambda_closed(inst: LambdaInstance) -> int:
    """Closed form, dispatched on the three parameter cases."""
    n, delta, beta, b = inst.n, inst.delta, inst.beta, inst.b_size
    case = inst.case
    if case == 1:
        return _range_sum(b, delta - 1) + (2 * n - 1 - delta) * beta
    if case == 2:
        return _range_sum(delta + b - 2 * n + 1, delta - 1)
    return _range_sum(beta + 1, delta - 1) + (2 * n - b - delta + beta) * beta


MAX_ORACLE_ELEMENTS = 14


def lambda_bruteforce(inst: LambdaInstance) -> int:
    """Exhaustive maximum over admissible sequence pairs.

    Values above beta may each be used once; values at most beta repeat
    freely, and for them a beta-fill (second sequence) or a top-down
    distinct fill (first sequence) is optimal.  The search enumerates which
    high values are used and how many go to the distinct sequence; the fully
    naive enumerator ``lambda_naive`` validates this reduction.
    """
    n, delta, beta = inst.n, inst.delta, inst.beta
    size_a, size_b = inst.size_a, inst.size_b
    if size_a + size_b > MAX_ORACLE_ELEMENTS:
        raise DomainError(f"{size_a + size_b} elements too many for exhaustive search")
    high = list(range(beta + 1, delta))
    best = -1
    for use in range(1 << len(high)):
        chosen = [high[i] for i in range(len(high)) if use >> i & 1]
        s = sum(chosen)
        k = len(chosen)
        for to_a in range(max(0, k - size_b), min(size_a, k) + 1):
            rest_a = size_a - to_a
            if rest_a > beta:
                continue  # not enough distinct values <= beta to fill
            fill_a = _range_sum(beta - rest_a + 1, beta)
            fill_b = (size_b - (k - to_a)) * beta
            best = max(best, s + fill_a + fill_b)
    if best < 0:
        raise DomainError("no admissible sequence pair")
    return best


def lambda_naive(size_a: int, size_b: int, delta: int, beta: int) -> int:
    """Fully naive enumeration over all raw sequence pairs (tiny inputs only)."""
    best = -1
    for a_seq in combinations(range(1, delta), size_a):
        for b_seq in combinations_with_replacement(range(delta), size_b):
            counts: dict[int, int] = {}
            for k in a_seq + b_seq:
                counts[k] = counts.get(k, 0) + 1
            if any(k > beta and cnt >= 2 for k, cnt in counts.items()):
                continue
            best = max(best, sum(a_seq) + sum(b_seq))
    return best


def domain_grid(n_values) -> list[LambdaInstance]:
    """Every instance of the standing domain for the given half-orders."""
    out = []
    for n in n_values:
        for delta in range(n + 3, 2 * n):
            for beta in range(3, delta - 1):
                for b in range(2 * n - delta + 2, delta + 1):
                    out.append(LambdaInstance(n, delta, beta, b))
    return out


def appendix_split(g: Graph, v0: int) -> tuple[int, int]:
    """Split N(v0) by the degree threshold 2n - Delta + 2 into the
    high-degree part A and the low-degree part B (returned as bitmasks).

    When the graph is additionally property-free with beta <= Delta-2 and
    Delta >= n+3, the pigeonhole bound |B| >= 2n - Delta + 2 is asserted.
    """
    if g.order % 2:
        raise GraphError("split is defined for even order only")
    n = g.order // 2
    delta = g.max_degree()
    if g.degree(v0) != delta:
        raise GraphError(f"vertex {v0} does not attain the maximum degree {delta}")
    thr = 2 * n - delta + 2
    a_mask = b_mask = 0
    for w in bits(g.rows[v0]):
        if g.degree(w) >= thr:
            a_mask |= 1 << w
        else:
            b_mask |= 1 << w
    beta = _largest_repeated_degree(g)
    if (beta is not None and beta <= delta - 2 and delta >= n + 3
            and is_property_free(g, 3)):
        assert b_mask.bit_count() >= 2 * n - delta + 2
    return a_mask, b_mask


def _largest_repeated_degree(g: Graph):
    from .certify import repeated_degree_max

    return repeated_degree_max(g)
