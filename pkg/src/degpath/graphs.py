"""Immutable small-graph kernel.

Graphs are stored as per-vertex adjacency bit rows (Python ints), so
neighborhood operations are single mask operations.  Orders up to 256 are
accepted for construction and queries; the graph6 text format is restricted
to orders <= 64, and canonical labeling / enumeration (see ``canon``) to
orders <= 11.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

MAX_ORDER = 256
GRAPH6_MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph construction or query."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with 0-based dense vertex labels.

    ``rows[i]`` has bit ``j`` set iff ``i`` and ``j`` are adjacent.
    Instances are immutable; all operations return new graphs.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order {self.order} outside 1..{MAX_ORDER}")
        if len(self.rows) != self.order:
            raise GraphError("row count does not match order")
        full = (1 << self.order) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {i} has bits outside vertex range")
            if r >> i & 1:
                raise GraphError(f"loop at vertex {i}")
        for i in range(self.order):
            for j in range(i + 1, self.order):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise GraphError(f"asymmetric adjacency at ({i},{j})")

    # -- queries ---------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> int:
        """Neighborhood of ``i`` as a bitmask."""
        self._check_vertex(i)
        return self.rows[i]

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list sorted lexicographically, each edge as (i, j) with i < j."""
        out = []
        for i in range(self.order):
            r = self.rows[i] >> (i + 1) << (i + 1)
            while r:
                j = (r & -r).bit_length() - 1
                out.append((i, j))
                r &= r - 1
        return out

    def max_degree(self) -> int:
        return max(self.rows[i].bit_count() for i in range(self.order))

    def _check_vertex(self, i: int) -> None:
        if not 0 <= i < self.order:
            raise GraphError(f"vertex {i} out of range for order {self.order}")


def bitmask(members) -> int:
    """Bitmask of an iterable of vertex ids."""
    m = 0
    for v in members:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Vertex ids of a bitmask, ascending."""
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return out


def build_graph(order: int, edges) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 1..{MAX_ORDER}")
    rows = [0] * order
    for i, j in edges:
        if not (0 <= i < order and 0 <= j < order):
            raise GraphError(f"edge ({i},{j}) out of range for order {order}")
        if i == j:
            raise GraphError(f"loop edge at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(order, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    rows = tuple((full & ~g.rows[i]) & ~(1 << i) for i in range(g.order))
    return Graph(g.order, rows)


def block_counts(g: Graph, s: int, t: int) -> tuple[int, int]:
    """Edge count between/within vertex sets and its complement count.

    ``s`` and ``t`` are bitmasks.  If ``s == t`` the within-set count e(S)
    is returned together with ebar(S) = C(|S|,2) - e(S); otherwise the sets
    must be disjoint and the pair (e(S,T), ebar(S,T) = |S||T| - e(S,T)) is
    returned.
    """
    if s == t:
        e = sum((g.rows[v] & s).bit_count() for v in bits(s)) // 2
        return e, comb(s.bit_count(), 2) - e
    if s & t:
        raise GraphError("distinct vertex sets must be disjoint")
    e = sum((g.rows[v] & t).bit_count() for v in bits(s))
    return e, s.bit_count() * t.bit_count() - e


def degree_sequence(g: Graph) -> list[int]:
    """Degrees in non-increasing order."""
    return sorted((r.bit_count() for r in g.rows), reverse=True)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides must be non-empty")
    if a + b > MAX_ORDER:
        raise GraphError(f"order {a + b} exceeds {MAX_ORDER}")
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    rows = tuple(right if i < a else left for i in range(a + b))
    return Graph(a + b, rows)


def half_graph(n: int) -> Graph:
    """Half graph on a_1..a_n, b_1..b_n with a_i ~ b_j iff i <= j.

    Vertices 0..n-1 are a_1..a_n and n..2n-1 are b_1..b_n.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    if 2 * n > MAX_ORDER:
        raise GraphError(f"order {2 * n} exceeds {MAX_ORDER}")
    edges = [(i, n + j) for i in range(n) for j in range(i, n)]
    return build_graph(2 * n, edges)


# -- graph6 text format ---------------------------------------------------
#
# First byte: order+63 for order <= 62, or '~' followed by two 6-bit groups
# (each +63) for orders 63..64.  Then the upper-triangle bits x(0,1),
# x(0,2), x(1,2), x(0,3), ... in column-major order, packed 6 bits per byte
# big-endian, zero padded, each byte offset by +63.


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def graph6_encode(g: Graph) -> str:
    if g.order > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"graph6 supports order <= {GRAPH6_MAX_ORDER}")
    if g.order <= 62:
        head = chr(g.order + 63)
    else:
        head = "~" + chr((g.order >> 6) + 63) + chr((g.order & 63) + 63)
    bitstream = []
    for j in range(1, g.order):
        for i in range(j):
            bitstream.append(g.rows[i] >> j & 1)
    body = []
    for k in range(0, len(bitstream), 6):
        group = bitstream[k:k + 6] + [0] * (6 - len(bitstream[k:k + 6]))
        val = 0
        for b in group:
            val = val << 1 | b
        body.append(chr(val + 63))
    return head + "".join(body)


def graph6_decode(text: str) -> Graph:
    if not text:
        raise Graph6Error("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    if text[0] == "~":
        if len(text) < 3:
            raise Graph6Error("truncated extended header")
        order = (ord(text[1]) - 63) << 6 | (ord(text[2]) - 63)
        body = text[3:]
    else:
        order = ord(text[0]) - 63
        body = text[1:]
    if not 1 <= order <= GRAPH6_MAX_ORDER:
        raise Graph6Error(f"order {order} outside 1..{GRAPH6_MAX_ORDER}")
    nbits = order * (order - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error("bit payload length does not match order")
    stream = []
    for ch in body:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            stream.append(val >> k & 1)
    if any(stream[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * order
    pos = 0
    for j in range(1, order):
        for i in range(j):
            if stream[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(order, tuple(rows))
