#!/usr/bin/env python3
"""Rebuild the benchmark instances under data/ as DIMACS .col files.

myciel*: Mycielski construction (networkx.mycielski_graph).
queen*:  n x n queen graphs (same row, column or diagonal).
jean:    Les Miserables co-appearance network (networkx ships the same
         77-vertex, 254-edge data); three isolated vertices are appended so
         the file has 80 vertices like the original.
"""
import itertools
import pathlib
import sys

import networkx as nx


def queen(n):
    g = nx.Graph()
    cells = [(r, c) for r in range(n) for c in range(n)]
    g.add_nodes_from(cells)
    for (r1, c1), (r2, c2) in itertools.combinations(cells, 2):
        if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
            g.add_edge((r1, c1), (r2, c2))
    return g


def write_col(g, path, comment, extra_isolated=0):
    nodes = list(g.nodes())
    index = {v: i + 1 for i, v in enumerate(nodes)}
    edges = sorted(tuple(sorted((index[u], index[v]))) for u, v in g.edges())
    n = len(nodes) + extra_isolated
    with open(path, "w") as f:
        f.write(f"c {comment}\n")
        f.write(f"p edge {n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"e {u} {v}\n")


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_col(nx.mycielski_graph(6), out / "myciel5.col", "Mycielski graph, 47 vertices")
    write_col(nx.mycielski_graph(7), out / "myciel6.col", "Mycielski graph, 95 vertices")
    for n in (5, 6, 7, 13):
        write_col(queen(n), out / f"queen{n}_{n}.col", f"{n}x{n} queen graph")
    write_col(nx.les_miserables_graph(), out / "jean.col",
              "Les Miserables co-appearances; last three vertices isolated", extra_isolated=3)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data")
