#!/usr/bin/env python3
"""Write all 12,346 graphs on 8 vertices, one per isomorphism class, as graph6.

Every 8-vertex graph is a 7-vertex graph plus one vertex, so the atlas of
7-vertex graphs is extended by each of the 128 possible neighbourhoods and
the results are deduplicated (WL hash buckets, then an exact isomorphism
test inside each bucket).
"""

import argparse
import sys

import networkx as nx

EXPECTED = 12346


def extensions():
    for base in nx.graph_atlas_g():
        if base.number_of_nodes() != 7:
            continue
        for mask in range(128):
            g = nx.Graph(base)
            g.add_node(7)
            g.add_edges_from((v, 7) for v in range(7) if mask >> v & 1)
            yield g


def classes():
    buckets = {}
    reps = []
    for g in extensions():
        degrees = tuple(sorted(d for _, d in g.degree()))
        key = (degrees, nx.weisfeiler_lehman_graph_hash(g, iterations=3))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", help="output graph6 file")
    args = ap.parse_args()

    reps = classes()
    if len(reps) != EXPECTED:
        sys.exit(f"expected {EXPECTED} classes, got {len(reps)}")
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in reps)
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {args.out}")


if __name__ == "__main__":
    main()
