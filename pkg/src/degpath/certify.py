"""Certificate checks for the counting identities and lemma inequalities
underlying the path-of-length-three extremal argument.

Every check works on a concrete graph in exact integer arithmetic and is
hypothesis-gated: a check first tests whether the statement's hypotheses
hold (order parity, edge-count threshold, parameter ranges) and only then
asserts the conclusion.  Reports carry instance counts so vacuous passes
are visible, and every violation carries a graph6 witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from .canon import are_isomorphic
from .detect import is_property_free, path3_exists_between
from .graphs import Graph, block_counts, bits, complement, complete_bipartite, graph6_encode

REPORT_VERSION = "cert-report/1"


class CertificateError(ValueError):
    """A check was invoked outside its preconditions."""


@dataclass(frozen=True)
class PairPartition:
    """Vertex-set decomposition induced by an equal-degree pair (u, v).

    B = common neighbors, A_u / A_v = private neighbors, D = vertices seen
    by neither; together with {u, v} these tile the vertex set.  ``x`` is
    |B|, ``ind`` indicates adjacency of the pair, and ``c`` is the degree
    excess beta - n - ind with n from order 2n+1 or 2n.
    """

    u: int
    v: int
    beta: int
    ind: int
    B: int
    A_u: int
    A_v: int
    D: int
    x: int
    c: int


@dataclass(frozen=True)
class SecondLevelPartition:
    """Second pigeonhole level: the pair inside B with the most common
    D-degree, decomposed within D."""

    u1: int
    v1: int
    gamma: int
    B1: int
    A_u1: int
    A_v1: int
    y: int


@dataclass
class Violation:
    graph6: str
    pair: list[int]
    detail: str

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "pair": self.pair, "detail": self.detail}


@dataclass
class CheckRecord:
    check: str
    order: int
    instances: int = 0
    violations: list[Violation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "order": self.order,
            "instances": self.instances,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass
class CertificateReport:
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(len(r.violations) for r in self.checks)

    def record(self, check: str, order: int) -> CheckRecord:
        for r in self.checks:
            if r.check == check and r.order == order:
                return r
        r = CheckRecord(check, order)
        self.checks.append(r)
        return r

    def merge_record(self, rec: CheckRecord) -> None:
        mine = self.record(rec.check, rec.order)
        mine.instances += rec.instances
        mine.violations.extend(rec.violations)

    def merge(self, other: "CertificateReport") -> None:
        for r in other.checks:
            mine = self.record(r.check, r.order)
            mine.instances += r.instances
            mine.violations.extend(r.violations)

    def to_dict(self) -> dict:
        return {"version": REPORT_VERSION, "checks": [r.to_dict() for r in self.checks]}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _half_order(order: int) -> int:
    # n with order = 2n+1 (odd) or 2n (even)
    return order // 2


def pair_partition(g: Graph, u: int, v: int) -> PairPartition:
    """Decompose V by the equal-degree pair (u, v) and assert the size
    identities |A_u| = |A_v| = beta - x - ind and the |D| formula."""
    if u == v:
        raise CertificateError("pair vertices must be distinct")
    beta = g.degree(u)
    if beta != g.degree(v):
        raise CertificateError(f"degrees differ: d({u})={beta}, d({v})={g.degree(v)}")
    ind = 1 if g.has_edge(u, v) else 0
    bu, bv = 1 << u, 1 << v
    B = g.rows[u] & g.rows[v]
    A_u = g.rows[u] & ~(bv | B)
    A_v = g.rows[v] & ~(bu | B)
    full = (1 << g.order) - 1
    D = full & ~(g.rows[u] | g.rows[v] | bu | bv)
    x = B.bit_count()
    n = _half_order(g.order)
    c = beta - n - ind
    part = PairPartition(u, v, beta, ind, B, A_u, A_v, D, x, c)
    # recompute and assert the size identities
    assert A_u.bit_count() == A_v.bit_count() == beta - x - ind
    expected_d = x - 2 * c - (1 if g.order % 2 else 2)
    assert D.bit_count() == expected_d
    assert (B | A_u | A_v | D | bu | bv) == full
    assert B & A_u == B & A_v == A_u & A_v == D & (B | A_u | A_v) == 0
    return part


def check_zero_blocks(g: Graph, p: PairPartition) -> bool:
    """True iff e(A_u,B) = e(A_v,B) = e(B) = e(A_u,A_v) = 0."""
    for s, t in ((p.A_u, p.B), (p.A_v, p.B), (p.B, p.B), (p.A_u, p.A_v)):
        if block_counts(g, s, t)[0] != 0:
            return False
    return True


def check_complement_identity(g: Graph, p: PairPartition) -> CheckRecord:
    """Verify the closed form for the complement blocks of V\\D and the
    complement-edge lower bound with ebar(B,D) and ebar(D) counted directly.

    The closed form equals the sum of the seven pair blocks of V\\D spanned
    by {u}, {v}, A_u, A_v, B, except the within-set blocks of A_u and A_v;
    ebar(V\\D) itself exceeds it by exactly ebar(A_u) + ebar(A_v).
    """
    if not check_zero_blocks(g, p):
        raise CertificateError("complement identity requires the four zero blocks")
    rec = CheckRecord("complement-identity", g.order, instances=1)
    beta, ind, x = p.beta, p.ind, p.x
    n = _half_order(g.order)
    bu, bv = 1 << p.u, 1 << p.v

    block_sum = (
        block_counts(g, bu, p.A_v)[1] if p.A_v else 0) + (
        block_counts(g, bv, p.A_u)[1] if p.A_u else 0) + (
        block_counts(g, p.A_u, p.A_v)[1] if p.A_u and p.A_v else 0) + (
        block_counts(g, p.B, p.A_u)[1] if p.B and p.A_u else 0) + (
        block_counts(g, p.B, p.A_v)[1] if p.B and p.A_v else 0) + (
        block_counts(g, p.B, p.B)[1]) + (
        block_counts(g, bu, bv)[1])
    full = (1 << g.order) - 1
    vd = full & ~p.D
    ebar_vd = block_counts(g, vd, vd)[1]
    ebar_au = block_counts(g, p.A_u, p.A_u)[1]
    ebar_av = block_counts(g, p.A_v, p.A_v)[1]
    closed = (beta + 1 - ind) ** 2 - (x * x + 5 * x) // 2 - ind
    ebar_bd = block_counts(g, p.B, p.D)[1]
    ebar_d = block_counts(g, p.D, p.D)[1]
    e_comp = complement(g).edge_count()
    konst = 2 if g.order % 2 else 4
    bound = (beta - 1 - ind) ** 2 + 4 * n - (x * x + x) // 2 - konst - ind + ebar_bd + ebar_d

    if block_sum != closed:
        rec.violations.append(Violation(
            graph6_encode(g), [p.u, p.v],
            f"block sum={block_sum} but closed form={closed}"))
    if ebar_vd != closed + ebar_au + ebar_av:
        rec.violations.append(Violation(
            graph6_encode(g), [p.u, p.v],
            f"ebar(V\\D)={ebar_vd} but closed form + ebar(A_u) + ebar(A_v) = "
            f"{closed + ebar_au + ebar_av}"))
    if e_comp < bound:
        rec.violations.append(Violation(
            graph6_encode(g), [p.u, p.v],
            f"e(complement)={e_comp} below bound {bound}"))
    return rec


def second_level_partition(g: Graph, p: PairPartition) -> SecondLevelPartition:
    """gamma is the largest integer such that two vertices of B have exactly
    gamma neighbors in D; the lexicographically smallest realizing pair is
    decomposed within D."""
    by_count: dict[int, list[int]] = {}
    for w in bits(p.B):
        by_count.setdefault((g.rows[w] & p.D).bit_count(), []).append(w)
    shared = [k for k, vs in by_count.items() if len(vs) >= 2]
    if not shared:
        raise CertificateError("gamma undefined: no two vertices of B share a D-degree")
    gamma = max(shared)
    u1, v1 = sorted(by_count[gamma])[:2]
    nd_u1 = g.rows[u1] & p.D
    nd_v1 = g.rows[v1] & p.D
    B1 = nd_u1 & nd_v1
    return SecondLevelPartition(u1, v1, gamma, B1, nd_u1 & ~B1, nd_v1 & ~B1,
                                B1.bit_count())


def check_c_lemma(g: Graph, u: int, v: int) -> CheckRecord:
    """For a pair with degree excess c >= 1 in a property-free graph, verify
    the second-level zero blocks, the two intermediate inequalities, and the
    final complement-edge lower bound."""
    if not is_property_free(g, 3):
        raise CertificateError("graph must contain no equal-degree path of length three")
    p = pair_partition(g, u, v)
    if p.c < 1:
        raise CertificateError(f"pair excess c={p.c} but the bound needs c >= 1")
    rec = CheckRecord("c-lemma", g.order, instances=1)
    g6 = graph6_encode(g)

    def fail(detail: str) -> None:
        rec.violations.append(Violation(g6, [u, v], detail))

    s = second_level_partition(g, p)
    if g.has_edge(s.u1, s.v1):
        fail(f"second-level pair ({s.u1},{s.v1}) adjacent despite e(B)=0")
    if s.A_u1.bit_count() != s.gamma - s.y or s.A_v1.bit_count() != s.gamma - s.y:
        fail("second-level private-neighbor sizes differ from gamma - y")
    for a, b in ((s.A_u1, s.B1), (s.A_v1, s.B1), (s.B1, s.B1), (s.A_u1, s.A_v1)):
        if block_counts(g, a, b)[0] != 0:
            fail("second-level zero block violated")
            break

    gamma, y, x, c, ind = s.gamma, s.y, p.x, p.c, p.ind
    n = _half_order(g.order)
    ebar_d = block_counts(g, p.D, p.D)[1]
    ebar_bd = block_counts(g, p.B, p.D)[1]

    # ebar(D) >= gamma^2 - (y^2+y)/2 >= C(gamma,2)
    mid = gamma * gamma - (y * y + y) // 2
    if not (ebar_d >= mid >= comb(gamma, 2)):
        fail(f"ebar(D)={ebar_d}, gamma^2-(y^2+y)/2={mid}, C(gamma,2)={comb(gamma, 2)}")

    # ebar(B,D) chain, parity-dispatched
    if g.order % 2:
        line1 = comb(x + 1, 2) - comb(gamma, 2) - 2 * c * c - c - (2 * c + 1) * gamma - x
        line2 = comb(x + 1, 2) - comb(gamma, 2) + 2 * c * c + 3 * c + 1 - 2 * (c + 1) * x
    else:
        line1 = comb(x + 1, 2) - comb(gamma, 2) - 2 * c * c - 3 * c - (2 * c + 2) * gamma - x - 1
        line2 = comb(x + 1, 2) - comb(gamma, 2) + 2 * c * c + 5 * c + 3 - (2 * c + 3) * x
    if not (ebar_bd >= line1 >= line2):
        fail(f"ebar(B,D)={ebar_bd} fails chain {line1} >= {line2}")

    e_comp = complement(g).edge_count()
    if g.order % 2:
        final = n * n + c * c - c - ind
    else:
        final = (n * n - n + 1) + c * c - 1 - ind
    if e_comp < final:
        fail(f"e(complement)={e_comp} below final bound {final}")
    return rec


def repeated_degree_max(g: Graph):
    """Largest degree attained by at least two vertices, or None."""
    seen: dict[int, int] = {}
    best = None
    for i in range(g.order):
        d = g.degree(i)
        seen[d] = seen.get(d, 0) + 1
        if seen[d] >= 2 and (best is None or d > best):
            best = d
    return best


def check_global_lemmas(g: Graph) -> CertificateReport:
    """Hypothesis-gated sweep of the structural lemmas on one graph.

    The graph must be property-free for path length three (the lemmas are
    about such graphs).  Each record's instance count says how often the
    hypotheses actually held.
    """
    if not is_property_free(g, 3):
        raise CertificateError("graph must contain no equal-degree path of length three")
    rep = CertificateReport()
    order = g.order
    n = _half_order(order)
    odd = order % 2 == 1
    e = g.edge_count()
    delta = g.max_degree()
    beta = repeated_degree_max(g)
    g6 = graph6_encode(g)
    threshold = n * n + n if odd else n * n - 1
    standing = (n >= 2 if odd else n >= 3) and e >= threshold

    rec = rep.record("beta-upper", order)
    if standing and beta is not None:
        rec.instances += 1
        limit = n + 1
        if beta > limit:
            rec.violations.append(Violation(g6, [], f"beta={beta} exceeds n+1={limit}"))
        elif beta == limit:
            extremal = complete_bipartite(n, n + 1) if odd else complete_bipartite(n + 1, n - 1)
            if not are_isomorphic(g, extremal):
                rec.violations.append(Violation(
                    g6, [], "beta = n+1 but graph is not the extremal complete bipartite"))

    rec = rep.record("beta-lower", order)
    if standing and beta is not None:
        rec.instances += 1
        if beta < 3:
            rec.violations.append(Violation(g6, [], f"beta={beta} below 3"))
        if not odd and beta > delta:
            rec.violations.append(Violation(g6, [], f"beta={beta} above Delta={delta}"))

    rec = rep.record("beta-delta-dichotomy", order)
    if standing and beta is not None and (n >= 5 if odd else n >= 6):
        rec.instances += 1
        cap = n + 1 if odd else n + 2
        if not (beta >= delta - 1 or delta <= cap):
            rec.violations.append(Violation(
                g6, [], f"beta={beta} < Delta-1={delta - 1} and Delta={delta} > {cap}"))

    # the small-n bounds live in the endgame where beta <= n already holds
    # (beta = n+1 forces the extremal bipartite graph, handled above)
    rec = rep.record("delta-upper-small-n", order)
    if (standing and beta is not None and beta <= n
            and ((odd and n in (2, 3, 4)) or (not odd and n in (3, 4, 5)))):
        rec.instances += 1
        cap = 2 * n - 2 if odd else 2 * n - 3
        if delta > cap:
            rec.violations.append(Violation(g6, [], f"Delta={delta} exceeds {cap}"))

    # neighborhood degree rule: if u in N(v) shares >= 2 neighbors with v,
    # no other neighbor of v has u's degree (holds for both parities, no
    # edge-count hypothesis)
    rec = rep.record("common-neighbor-degree-rule", order)
    for v in range(order):
        for u in bits(g.rows[v]):
            if (g.rows[u] & g.rows[v]).bit_count() >= 2:
                rec.instances += 1
                for w in bits(g.rows[v] & ~(1 << u)):
                    if g.degree(w) == g.degree(u):
                        rec.violations.append(Violation(
                            g6, [v, u], f"neighbor {w} shares degree {g.degree(w)} with {u}"))

    # three equal degrees >= 3 are impossible in the Delta = 2n-1 endgame
    # (odd order, the unique non-neighbor of the max-degree vertex avoids beta)
    rec = rep.record("no-three-equal-degrees", order)
    if (standing and odd and n in (2, 3, 4) and delta == 2 * n - 1
            and beta is not None and beta <= n):
        v0s = [i for i in range(order) if g.degree(i) == delta]
        if len(v0s) == 1:
            v0 = v0s[0]
            rest = [i for i in range(order)
                    if i != v0 and not g.has_edge(v0, i)]
            if len(rest) == 1 and beta is not None and g.degree(rest[0]) != beta:
                rec.instances += 1
                counts: dict[int, int] = {}
                for i in range(order):
                    d = g.degree(i)
                    if d >= 3:
                        counts[d] = counts.get(d, 0) + 1
                if any(cnt >= 3 for cnt in counts.values()):
                    rec.violations.append(Violation(
                        g6, [], "three distinct vertices share a degree >= 3"))

    return rep


def equal_degree_pairs(g: Graph) -> list[tuple[int, int]]:
    """All unordered equal-degree pairs, lexicographically ordered."""
    out = []
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.degree(u) == g.degree(v):
                out.append((u, v))
    return out


def check_graph(g: Graph) -> CertificateReport:
    """Run every applicable certificate check on one property-free graph."""
    if not is_property_free(g, 3):
        raise CertificateError("graph must contain no equal-degree path of length three")
    rep = CertificateReport()
    g6 = graph6_encode(g)
    zb = rep.record("zero-blocks", g.order)
    for u, v in equal_degree_pairs(g):
        p = pair_partition(g, u, v)
        zb.instances += 1
        blocks_clear = check_zero_blocks(g, p)
        if blocks_clear != (not path3_exists_between(g, u, v)):
            zb.violations.append(Violation(
                g6, [u, v], "zero-block test disagrees with path existence"))
        if not blocks_clear:
            zb.violations.append(Violation(
                g6, [u, v], "nonzero block despite property-free graph"))
            continue
        rep.merge_record(check_complement_identity(g, p))
        if p.c >= 1:
            rep.merge_record(check_c_lemma(g, u, v))
    rep.merge(check_global_lemmas(g))
    return rep
