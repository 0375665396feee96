"""Writes tests/data/connected_graphs_upto7.txt from the networkx graph atlas.

Each line is one connected graph, up to isomorphism, on at most 7 vertices:
    n u1-v1 u2-v2 ...
"""
import pathlib

import networkx as nx

out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_graphs_upto7.txt"
lines = []
for g in nx.graph_atlas_g():
    n = g.number_of_nodes()
    if n == 0 or not nx.is_connected(g):
        continue
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    lines.append(" ".join([str(n)] + [f"{u}-{v}" for u, v in edges]))
out.write_text("\n".join(lines) + "\n")
print(len(lines), "graphs written to", out)
