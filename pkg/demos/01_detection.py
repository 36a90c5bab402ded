"""Finding equal-degree paths.

The forbidden configuration is a simple path of length ell whose two
endpoints have the same degree in the whole graph.  This script runs the
detector on a few hand-built graphs and shows the returned witnesses.
"""

from degpath import (
    build_graph,
    complete_bipartite,
    find_equal_degree_path,
    find_equal_degree_path3,
    graph6_encode,
    verify_witness,
)


def show(name, g, ell=3):
    w = find_equal_degree_path(g, ell)
    tag = f"{name} ({graph6_encode(g)}), ell={ell}:"
    if w is None:
        print(f"{tag} no equal-degree path")
    else:
        assert verify_witness(g, w, ell)
        degs = [g.degree(v) for v in w.vertices]
        print(f"{tag} witness {w.vertices}, endpoint degrees "
              f"{degs[0]} = {degs[-1]}")


def main():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    show("path on 4 vertices", p4)

    # K_{2,3} dodges the configuration: the length-3 paths all run between
    # the two sides, whose degrees differ (3 vs 2).
    show("K_{2,3}", complete_bipartite(2, 3))

    # one extra edge inside the large side breaks that
    broken = build_graph(5, complete_bipartite(2, 3).edges() + [(2, 3)])
    show("K_{2,3} + edge", broken)

    # the fast length-3 detector agrees with the generic one
    assert (find_equal_degree_path3(broken).vertices
            == find_equal_degree_path(broken, 3).vertices)

    c6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
    for ell in (1, 2, 3, 4, 5):
        show("C6", c6, ell)


if __name__ == "__main__":
    main()
