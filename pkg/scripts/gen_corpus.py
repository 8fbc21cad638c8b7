#!/usr/bin/env python3
"""One-time fixture generator (development tool, not a runtime dependency).

Builds the two graph6 corpora the test suite audits:
  tests/fixtures/all_graphs_n1_to_6.g6    every graph on 1..6 vertices (208)
  tests/fixtures/connected_n1_to_7.g6     every connected graph on 1..7 vertices (996)

Graphs come from networkx's bundled graph atlas (one representative per
isomorphism class up to order 7).  The counts are cross-checked against the
published enumeration of graphs by order — all: 1, 2, 4, 11, 34, 156, 1044;
connected: 1, 1, 2, 6, 21, 112, 853 — so a wrong or incomplete atlas read
fails loudly.  Lines are emitted through the project's own graph6 writer and
round-tripped through its parser before being written.
"""

import pathlib
import sys

import networkx as nx

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from domguard.graph import Graph  # noqa: E402
from domguard.graph6 import parse_graph6, write_graph6  # noqa: E402

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def to_domguard(nxg: nx.Graph) -> Graph:
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])


def main() -> None:
    fixtures = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    fixtures.mkdir(parents=True, exist_ok=True)

    by_n: dict[int, list[Graph]] = {n: [] for n in range(1, 8)}
    connected_by_n: dict[int, list[Graph]] = {n: [] for n in range(1, 8)}
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if not 1 <= n <= 7:
            continue
        g = to_domguard(nxg)
        by_n[n].append(g)
        if nx.is_connected(nxg):
            connected_by_n[n].append(g)

    for n in range(1, 8):
        assert len(by_n[n]) == ALL_COUNTS[n], (n, len(by_n[n]))
        assert len(connected_by_n[n]) == CONNECTED_COUNTS[n], (n, len(connected_by_n[n]))

    def dump(path: pathlib.Path, graphs: list[Graph]) -> None:
        lines = []
        for g in graphs:
            line = write_graph6(g)
            assert parse_graph6(line) == g
            lines.append(line)
        assert len(set(lines)) == len(lines), "duplicate graph6 lines"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"wrote {len(lines)} graphs to {path}")

    dump(fixtures / "all_graphs_n1_to_6.g6",
         [g for n in range(1, 7) for g in by_n[n]])
    dump(fixtures / "connected_n1_to_7.g6",
         [g for n in range(1, 8) for g in connected_by_n[n]])


if __name__ == "__main__":
    main()
