#!/usr/bin/env python3
"""Regenerate the reference graph6 corpora under crates/core/tests/data.

Connected graphs on n vertices, one per isomorphism class, deduplicated with
nauty's canonical certificate (pynauty) and encoded with networkx's graph6
writer. Both tools are independent of the Rust code they are used to check.

    pip install pynauty networkx
    python3 scripts/gen_reference_graphs.py
"""
import itertools
import pathlib

import networkx as nx
import pynauty

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "tests" / "data"


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: [u for u in g.neighbors(v)] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def all_graphs(n):
    """One representative per isomorphism class of graphs (connected or not) on n vertices."""
    if n == 1:
        g = nx.Graph()
        g.add_node(0)
        return [g]
    reps = {}
    for base in all_graphs(n - 1):
        for r in range(n):
            for nbrs in itertools.combinations(range(n - 1), r):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in nbrs)
                cert = certificate(g)
                if cert not in reps:
                    reps[cert] = g
    return list(reps.values())


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for n in (7, 8):
        lines = sorted(
            nx.to_graph6_bytes(g, header=False).decode().strip()
            for g in all_graphs(n)
            if nx.is_connected(g)
        )
        (OUT / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main()
