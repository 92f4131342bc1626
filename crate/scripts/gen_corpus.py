#!/usr/bin/env python3
"""Regenerate crates/core/tests/data/graphs_upto8.g6.

All graphs on 1..=8 vertices up to isomorphism, one graph6 line each,
ordered by vertex count. Orders 1..7 come from the networkx atlas; order 8
is grown from order 7 by adding one vertex with every neighbour subset and
deduplicating by isomorphism.
"""
import sys
from collections import defaultdict

import networkx as nx
from networkx.algorithms.graph_hashing import weisfeiler_lehman_graph_hash as wl

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def grow(graphs, n):
    buckets = defaultdict(list)
    out = []
    for g in graphs:
        for mask in range(1 << (n - 1)):
            h = nx.Graph(g)
            h.add_node(n - 1)
            h.add_edges_from((n - 1, u) for u in range(n - 1) if mask >> u & 1)
            degs = tuple(sorted(d for _, d in h.degree()))
            key = (h.number_of_edges(), degs, wl(h, iterations=3))
            if any(nx.is_isomorphic(h, o) for o in buckets[key]):
                continue
            buckets[key].append(h)
            out.append(h)
    return out


def main(path):
    by_order = defaultdict(list)
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 7:
            by_order[g.number_of_nodes()].append(g)
    by_order[8] = grow(by_order[7], 8)
    with open(path, "w") as f:
        for n in range(1, 9):
            assert len(by_order[n]) == EXPECTED[n], (n, len(by_order[n]))
            for g in by_order[n]:
                g = nx.convert_node_labels_to_integers(g)
                f.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/data/graphs_upto8.g6")
