"""Detection of the forbidden configuration: two vertices of equal degree
joined by a simple path of length ell.

Witnesses are returned as explicit vertex sequences so callers can re-check
them independently of the search that produced them.  Ties are broken by the
lexicographically smallest vertex tuple, which keeps outputs reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, bits

MAX_PATH_LENGTH = 8


@dataclass(frozen=True)
class Witness:
    """A simple path whose two endpoints have equal degree.

    ``vertices`` lists the ell+1 pairwise-distinct vertices in path order.
    """

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def verify_witness(g: Graph, w: Witness, ell: int | None = None) -> bool:
    """True iff ``w`` is a valid equal-degree path in ``g``.

    When ``ell`` is given the path must additionally have that length.
    """
    vs = w.vertices
    if ell is not None and w.length != ell:
        return False
    if len(vs) < 2 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.order for v in vs):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
        return False
    return g.degree(vs[0]) == g.degree(vs[-1])


def path3_exists_between(g: Graph, u: int, v: int) -> bool:
    """True iff some simple path u-x-y-v of length three joins u and v."""
    if u == v:
        raise GraphError("endpoints must be distinct")
    excl = (1 << u) | (1 << v)
    nu = g.rows[u] & ~excl
    nv = g.rows[v] & ~excl
    for x in bits(nu):
        # y must be a neighbor of both x and v, distinct from x, u, v
        if g.rows[x] & nv & ~(1 << x):
            return True
    return False


def _path3_present(g: Graph) -> bool:
    """Existence-only check, O(edges * order) via degree buckets.

    For each edge (a, b) taken as the middle edge of a candidate path
    u-a-b-v, the endpoints u in N(a)\\{b} and v in N(b)\\{a} must have equal
    degree and be distinct.
    """
    degmask = {}
    for i in range(g.order):
        degmask.setdefault(g.rows[i].bit_count(), 0)
        degmask[g.rows[i].bit_count()] |= 1 << i
    for a, b in g.edges():
        na = g.rows[a] & ~(1 << b)
        nb = g.rows[b] & ~(1 << a)
        for mask in degmask.values():
            ua = na & mask
            vb = nb & mask
            if ua and vb and not (ua == vb and ua.bit_count() == 1):
                return True
    return False


def find_equal_degree_path3(g: Graph) -> Witness | None:
    """Lexicographically smallest length-3 equal-degree path, if any."""
    if not _path3_present(g):
        return None
    deg = [g.rows[i].bit_count() for i in range(g.order)]
    for u in range(g.order):
        for x in bits(g.rows[u]):
            for y in bits(g.rows[x] & ~(1 << u)):
                for v in bits(g.rows[y] & ~(1 << u) & ~(1 << x)):
                    if deg[v] == deg[u]:
                        return Witness((u, x, y, v))
    raise AssertionError("existence check and witness search disagree")


def find_equal_degree_path(g: Graph, ell: int) -> Witness | None:
    """Lexicographically smallest length-``ell`` equal-degree path, if any.

    Depth-first simple-path enumeration in ascending vertex order; the final
    step only extends to vertices matching the start degree.
    """
    if not 1 <= ell <= MAX_PATH_LENGTH:
        raise GraphError(f"path length {ell} outside 1..{MAX_PATH_LENGTH}")
    if ell >= g.order:
        return None
    deg = [g.rows[i].bit_count() for i in range(g.order)]

    def extend(path: list[int], used: int) -> Witness | None:
        last = path[-1]
        if len(path) == ell:
            for v in bits(g.rows[last] & ~used):
                if deg[v] == deg[path[0]]:
                    return Witness((*path, v))
            return None
        for v in bits(g.rows[last] & ~used):
            found = extend(path + [v], used | 1 << v)
            if found is not None:
                return found
        return None

    for u in range(g.order):
        found = extend([u], 1 << u)
        if found is not None:
            return found
    return None


def is_property_free(g: Graph, ell: int = 3) -> bool:
    """True iff ``g`` contains no equal-degree path of length ``ell``."""
    if ell == 3:
        return not _path3_present(g)
    return find_equal_degree_path(g, ell) is None
