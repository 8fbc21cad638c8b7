"""graph6 and plain edge-list text formats.

graph6 follows the standard encoding: an order header (one byte for n <= 62,
'~' plus three bytes up to 258047, capped here at VERTEX_CAP), then the upper
triangle of the adjacency matrix in column-major order packed into 6-bit
groups stored as printable bytes 63..126.  The writer always emits the
minimal-length header, so write(parse(s)) == s for canonical input.

The edge-list format is for hand-written fixtures: '#' comments, a first
significant line "n <count>", then one "u v" pair per line (0-indexed).
"""

from __future__ import annotations

from .graph import VERTEX_CAP, Graph, GraphError

OPTIONAL_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _check_printable(text: str, start: int) -> None:
    for i in range(start, len(text)):
        c = ord(text[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"non-printable graph6 byte {c}", i)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.rstrip("\n")
    if line.startswith(OPTIONAL_HEADER):
        line = line[len(OPTIONAL_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 input", 0)
    _check_printable(line, 0)
    pos = 0
    first = ord(line[0]) - 63
    if first == 63:  # '~' introduces the 3-byte order form
        if len(line) < 4:
            raise Graph6Error("truncated multi-byte order header", len(line))
        if ord(line[1]) - 63 == 63:
            raise Graph6Error("8-byte order form exceeds the vertex cap", 1)
        n = 0
        for i in range(1, 4):
            n = (n << 6) | (ord(line[i]) - 63)
        pos = 4
    else:
        n = first
        pos = 1
    if n > VERTEX_CAP:
        raise Graph6Error(f"order {n} exceeds the vertex cap {VERTEX_CAP}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) - pos < nbytes:
        raise Graph6Error(f"truncated adjacency data: need {nbytes} bytes, have {len(line) - pos}", len(line))
    if len(line) - pos > nbytes:
        raise Graph6Error("trailing garbage after adjacency data", pos + nbytes)
    edges = []
    bit = 0
    u, v = 0, 1  # upper triangle, column-major: x(0,1) x(0,2) x(1,2) x(0,3) ...
    for i in range(nbytes):
        group = ord(line[pos + i]) - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", pos + i)
                continue
            if group >> k & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (minimal-length header)."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    group = 0
    count = 0
    for v in range(1, n):
        for u in range(v):
            group = (group << 1) | (g.adj[u] >> v & 1)
            count += 1
            if count == 6:
                out.append(chr(group + 63))
                group, count = 0, 0
    if count:
        out.append(chr((group << (6 - count)) + 63))
    return "".join(out)


def parse_graph6_lines(text: str) -> list[Graph]:
    """Parse a whole corpus: one graph6 line per graph, blank lines skipped."""
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc
    return graphs


class EdgeListError(ValueError):
    """Malformed edge-list fixture text."""


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise EdgeListError(f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError as exc:
                raise EdgeListError(f"line {lineno}: bad vertex count {tokens[1]!r}") from exc
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise EdgeListError(f"line {lineno}: bad edge {line!r}") from exc
        if u == v:
            raise EdgeListError(f"line {lineno}: loop {u} {v} not allowed")
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing 'n <count>' header line")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
