"""Extremal constructions and the summary table.

K_{n,n+1} and K_{n-1,n+1} realize the length-3 extremal values; the half
graph (a_i ~ b_j iff i <= j) shows p_ell(2m) >= m(m+1)/2 for every even
ell, since its degrees pair up across the bipartition but no even-length
path can join two equal-degree vertices.
"""

from degpath import (
    build_table,
    complete_bipartite,
    find_equal_degree_path,
    find_equal_degree_path3,
    graph6_encode,
    half_graph,
)


def main():
    for n in (2, 10, 50, 100):
        g = complete_bipartite(n, n + 1)
        assert find_equal_degree_path3(g) is None
        print(f"K_{{{n},{n + 1}}}: {g.edge_count()} edges, detector-negative")

    for n in range(1, 6):
        h = half_graph(n)
        neg = all(find_equal_degree_path(h, ell) is None
                  for ell in (2, 4) if ell < h.order)
        print(f"half graph n={n} ({graph6_encode(h)}): "
              f"{h.edge_count()} = n(n+1)/2 edges, even-length negative: {neg}")

    print("\nextremal table, ell in {1,2,3}, v in 4..8:")
    print(build_table([1, 2, 3], range(4, 9)).to_csv(), end="")


if __name__ == "__main__":
    main()
