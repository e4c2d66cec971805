#!/usr/bin/env python3
"""Regenerate the graph6 fixture corpora in data/.

planar_conn_le7.g6   every connected planar graph on 1..7 vertices (complete,
                     from the networkx graph atlas, planarity-filtered).
planar_conn_8v.g6    a curated layer of connected planar graphs on 8 vertices:
                     named polyhedra/grids plus stacked triangulations and
                     pairwise non-isomorphic connected subgraphs of them.

Run from the repository root:  python3 scripts/make_corpus.py
"""

import itertools
import random

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def is_target(g, n):
    return (
        g.number_of_nodes() == n
        and nx.is_connected(g)
        and nx.check_planarity(g)[0]
    )


def atlas_layer():
    out = []
    for g in nx.graph_atlas_g()[1:]:
        n = g.number_of_nodes()
        if 1 <= n <= 7 and g.number_of_edges() >= 0 and nx.is_connected(g):
            if nx.check_planarity(g)[0]:
                out.append(g)
    return out


def stacked_triangulations(rng, rounds=400):
    """Random apex insertions into faces, starting from K4, up to 8 vertices."""
    seen = []
    for _ in range(rounds):
        g = nx.complete_graph(4)
        # maintain a face list combinatorially: start with the 4 triangles
        faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        nxt = 4
        while g.number_of_nodes() < 8:
            f = faces.pop(rng.randrange(len(faces)))
            a, b, c = f
            v = nxt
            nxt += 1
            g.add_edges_from([(v, a), (v, b), (v, c)])
            faces.extend([(a, b, v), (a, c, v), (b, c, v)])
        seen.append(g)
    return dedupe(seen)


def dedupe(graphs):
    kept = []
    for g in graphs:
        if not any(
            g.number_of_nodes() == h.number_of_nodes()
            and g.number_of_edges() == h.number_of_edges()
            and nx.is_isomorphic(g, h)
            for h in kept
        ):
            kept.append(g)
    return kept


def curated_8v(rng):
    base = [
        nx.cycle_graph(8),
        nx.path_graph(8),
        nx.wheel_graph(8),  # hub + 7-cycle rim
        nx.grid_2d_graph(2, 4),
        nx.hypercube_graph(3),  # the cube
        nx.circular_ladder_graph(4),  # same family, 4-prism
        nx.ladder_graph(4),
        nx.star_graph(7),
        nx.lollipop_graph(5, 3),
        nx.barbell_graph(3, 2),
    ]
    base = [nx.convert_node_labels_to_integers(g) for g in base]
    # antiprism on 8 vertices
    anti = nx.cycle_graph(8)
    for i in range(0, 8, 2):
        anti.add_edge(i, (i + 2) % 8)
    base.append(anti)
    tris = stacked_triangulations(rng)
    base.extend(tris)
    # connected planar subgraphs of the triangulations (planarity inherited)
    subs = []
    for g in tris:
        edges = list(g.edges())
        for _ in range(60):
            keep = [e for e in edges if rng.random() < 0.75]
            h = nx.Graph()
            h.add_nodes_from(range(8))
            h.add_edges_from(keep)
            if h.number_of_nodes() == 8 and nx.is_connected(h):
                subs.append(h)
    pool = [g for g in base + subs if is_target(g, 8)]
    return dedupe(pool)


def main():
    rng = random.Random(20260819)
    atlas = atlas_layer()
    with open("data/planar_conn_le7.g6", "w") as f:
        for g in atlas:
            f.write(g6(g) + "\n")
    layer8 = curated_8v(rng)
    with open("data/planar_conn_8v.g6", "w") as f:
        for g in layer8:
            f.write(g6(g) + "\n")
    by_n = {}
    for g in atlas:
        by_n[g.number_of_nodes()] = by_n.get(g.number_of_nodes(), 0) + 1
    print("atlas layer:", by_n, "total", len(atlas))
    print("8-vertex layer:", len(layer8))


if __name__ == "__main__":
    main()
