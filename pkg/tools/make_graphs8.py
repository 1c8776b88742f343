"""Write every 8-vertex graph up to isomorphism to tests/data/graphs8.g6.

Each graph is obtained by attaching a new vertex to a 7-vertex atlas graph
in every possible way; duplicates are removed with WL-hash buckets and an
exact isomorphism test. The expected total is 12346.
"""
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs8.g6"


def main():
    buckets = defaultdict(list)
    for base in nx.graph_atlas_g():
        if base.number_of_nodes() != 7:
            continue
        for nbrs in range(1 << 7):
            g = base.copy()
            g.add_node(7)
            g.add_edges_from((7, v) for v in range(7) if nbrs >> v & 1)
            key = (g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
            reps = buckets[key]
            if not any(nx.is_isomorphic(g, h) for h in reps):
                reps.append(g)
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for reps in buckets.values() for g in reps)
    OUT.write_text("\n".join(lines) + "\n")
    print(len(lines), file=sys.stderr)


if __name__ == "__main__":
    main()
