"""Write every graph on at most 7 vertices, one per isomorphism class, as graph6.

The classes come from the networkx graph atlas (1253 graphs on 0..7 vertices).
"""
import argparse
from pathlib import Path

import networkx as nx

from minorforge.graph import Graph, write_graph6

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "src" / "minorforge" / "data" / "graphs_upto7.g6"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()
    lines = ["# all graphs on <= 7 vertices up to isomorphism (networkx graph atlas)"]
    for h in nx.graph_atlas_g():
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        lines.append(write_graph6(g))
    args.out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} graphs to {args.out}")


if __name__ == "__main__":
    main()
