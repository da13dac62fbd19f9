#!/usr/bin/env python3
"""Write graph6 catalogs of connected graphs (one per isomorphism class).

n <= 7 comes straight from the networkx graph atlas. n = 8 is produced by
attaching a vertex to every connected 7-vertex graph in all possible ways and
deduplicating with networkx isomorphism tests, bucketed by WL hash.

Usage: make_catalog.py OUTDIR
"""
import itertools
import sys
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    by_n = {n: [] for n in range(1, 8)}
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n >= 1 and nx.is_connected(g):
            by_n[n].append(g)

    buckets = {}
    eight = []
    for g in by_n[7]:
        for size in range(1, 8):
            for nbrs in itertools.combinations(range(7), size):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                eight.append(h)
    by_n[8] = eight

    for n, graphs in by_n.items():
        with open(out / f"connected{n}.g6", "w") as f:
            for g in graphs:
                f.write(g6(g) + "\n")
        print(n, len(graphs))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
