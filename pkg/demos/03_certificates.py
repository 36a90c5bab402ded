"""Certificate checks behind the extremal bound.

For an equal-degree pair (u, v) in a property-free graph, the vertex set
tiles into common neighbors B, private neighbors A_u / A_v, and the rest D,
and four blocks carry no edges at all.  Counting non-edges block by block
gives exact integer identities and inequalities; this script walks through
them on K_{4,5} and then sweeps every property-free class at orders 5-8.
"""

from degpath import (
    certificate_sweep,
    complete_bipartite,
    equal_degree_pairs,
    pair_partition,
    second_level_partition,
)
from degpath.graphs import bits


def main():
    g = complete_bipartite(4, 5)
    print("K_{4,5}: equal-degree pairs", equal_degree_pairs(g))
    p = pair_partition(g, 0, 1)
    print(f"pair (0,1): beta={p.beta}, adjacent={bool(p.ind)}, "
          f"B={bits(p.B)}, A_u={bits(p.A_u)}, A_v={bits(p.A_v)}, "
          f"D={bits(p.D)}, c={p.c}")
    s = second_level_partition(g, p)
    print(f"second level: pair ({s.u1},{s.v1}) shares gamma={s.gamma} "
          f"neighbors in D, overlap y={s.y}")

    for v in (5, 6, 7, 8):
        rep = certificate_sweep(v)
        counts = {r.check: r.instances for r in rep.checks}
        print(f"\nsweep v={v}: {rep.total_violations} violations")
        for name in sorted(counts):
            print(f"  {name}: {counts[name]} instances")


if __name__ == "__main__":
    main()
