"""Immutable bitmask graphs: construction, families, operators and structural queries.

Vertices are always 0..n-1 and every vertex subset fits in a single machine
word (hard cap of VERTEX_CAP vertices), so neighborhoods, covers and search
states are plain Python ints manipulated with &, |, ~ and bit_count().
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

VERTEX_CAP = 64

HAMILTONIAN_SEARCH_CAP = 24


class GraphError(ValueError):
    """Raised for invalid graph construction or operator preconditions."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with one adjacency bitmask per vertex.

    Instances are immutable after construction and safe to share between
    threads or processes.  ``labels`` is optional provenance metadata attached
    by graph operators (product, corona); it never participates in equality.
    """

    __slots__ = ("n", "adj", "closed", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        if n > VERTEX_CAP:
            raise GraphError(f"order {n} exceeds the vertex cap {VERTEX_CAP}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self.closed = tuple(r | (1 << v) for v, r in enumerate(rows))
        if labels is not None:
            if len(labels) != n:
                raise GraphError("labels length must equal vertex count")
            labels = tuple(labels)
        self.labels = labels

    # Mutation is blocked after __init__ populates the slots.
    def __setattr__(self, name, value):
        if hasattr(self, "labels"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


class VertexSet:
    """A subset of the vertices of a graph of order ``universe``, stored as a bitmask."""

    __slots__ = ("bits", "universe")

    def __init__(self, bits: int, universe: int):
        if universe < 0 or universe > VERTEX_CAP:
            raise GraphError(f"universe {universe} out of range")
        if bits < 0 or bits >> universe:
            raise GraphError(f"bitmask {bits:#x} has members outside 0..{universe - 1}")
        self.bits = bits
        self.universe = universe

    def __setattr__(self, name, value):
        if hasattr(self, "universe"):
            raise AttributeError("VertexSet is immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int) -> "VertexSet":
        bits = 0
        for i in indices:
            if not 0 <= i < universe:
                raise GraphError(f"vertex {i} outside universe 0..{universe - 1}")
            bits |= 1 << i
        return cls(bits, universe)

    @classmethod
    def from_text(cls, text: str, universe: int) -> "VertexSet":
        """Parse the comma-separated index form, e.g. ``"0,2,5"``; "" is the empty set."""
        text = text.strip()
        if not text:
            return cls(0, universe)
        try:
            indices = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise GraphError(f"bad vertex set text {text!r}") from exc
        return cls.from_indices(indices, universe)

    def to_text(self) -> str:
        return ",".join(str(v) for v in self)

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def _check(self, other: "VertexSet"):
        if self.universe != other.universe:
            raise GraphError("vertex sets over different universes")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.universe)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.universe)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.universe)

    def complement(self) -> "VertexSet":
        return VertexSet(~self.bits & ((1 << self.universe) - 1), self.universe)

    def __eq__(self, other) -> bool:
        return (isinstance(other, VertexSet) and self.bits == other.bits
                and self.universe == other.universe)

    def __hash__(self) -> int:
        return hash((self.bits, self.universe))

    def __repr__(self) -> str:
        return f"VertexSet({{{self.to_text()}}}, universe={self.universe})"


# ---------------------------------------------------------------------------
# Family generators.  Canonical numbering is documented per family: paths and
# cycles are numbered along the walk, stars put the center at vertex 0,
# hypercubes/Hamming graphs inherit the iterated-product numbering.
# ---------------------------------------------------------------------------

def path(t: int) -> Graph:
    if t < 1:
        raise GraphError(f"path order must be >= 1, got {t}")
    return Graph(t, ((i, i + 1) for i in range(t - 1)))


def cycle(t: int) -> Graph:
    if t < 3:
        raise GraphError(f"cycle order must be >= 3, got {t}")
    return Graph(t, [(i, (i + 1) % t) for i in range(t)])


def complete(t: int) -> Graph:
    if t < 1:
        raise GraphError(f"complete graph order must be >= 1, got {t}")
    return Graph(t, ((u, v) for u in range(t) for v in range(u + 1, t)))


def star(t: int) -> Graph:
    """Star of order t (center 0, t-1 leaves); requires t >= 2."""
    if t < 2:
        raise GraphError(f"star order must be >= 2, got {t}")
    return Graph(t, ((0, v) for v in range(1, t)))


def empty(t: int) -> Graph:
    if t < 1:
        raise GraphError(f"empty graph order must be >= 1, got {t}")
    return Graph(t)


def hamming(k: int, t: int) -> Graph:
    """Iterated Cartesian product of k copies of the complete graph of order t."""
    if k < 1 or t < 1:
        raise GraphError(f"hamming parameters must be positive, got ({k},{t})")
    if t ** k > VERTEX_CAP:
        raise GraphError(f"hamming({k},{t}) order {t ** k} exceeds cap {VERTEX_CAP}")
    g = complete(t)
    for _ in range(k - 1):
        g = cartesian_product(g, complete(t))
    return g


def hypercube(d: int) -> Graph:
    if d < 1:
        raise GraphError(f"hypercube dimension must be >= 1, got {d}")
    if 2 ** d > VERTEX_CAP:
        raise GraphError(f"hypercube({d}) order {2 ** d} exceeds cap {VERTEX_CAP}")
    return hamming(d, 2)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "empty": (empty, 1),
    "hypercube": (hypercube, 1),
    "hamming": (hamming, 2),
}


def generate(family: str, *params: int) -> Graph:
    """Build a named family graph, e.g. generate("path", 4) or generate("hamming", 2, 3)."""
    if family not in _FAMILIES:
        raise GraphError(f"unknown family {family!r}; known: {sorted(_FAMILIES)}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# Graph operators.
# ---------------------------------------------------------------------------

def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with vertex (x, y) numbered x*n(h) + y.

    (x,y) ~ (x',y') iff x == x' and yy' is an edge of h, or xx' is an edge of
    g and y == y'.  The numbering is part of the contract: guard placements on
    products must be reproducible across runs.
    """
    n = g.n * h.n
    if n > VERTEX_CAP:
        raise GraphError(f"product order {n} exceeds cap {VERTEX_CAP}")
    edges = []
    for x in range(g.n):
        base = x * h.n
        for (y, y2) in h.edges():
            edges.append((base + y, base + y2))
    for (x, x2) in g.edges():
        for y in range(h.n):
            edges.append((x * h.n + y, x2 * h.n + y))
    labels = tuple(f"({g.label(x)},{h.label(y)})" for x in range(g.n) for y in range(h.n))
    return Graph(n, edges, labels)


def corona(g: Graph, t: int) -> Graph:
    """Attach t new pendant vertices to every vertex of g.

    Original vertices keep their indices; the pendant block of vertex v
    occupies n + v*t .. n + v*t + t - 1.
    """
    if t < 1:
        raise GraphError(f"corona pendant count must be >= 1, got {t}")
    n = g.n * (t + 1)
    if n > VERTEX_CAP:
        raise GraphError(f"corona order {n} exceeds cap {VERTEX_CAP}")
    edges = list(g.edges())
    for v in range(g.n):
        for j in range(t):
            edges.append((v, g.n + v * t + j))
    labels = tuple(g.label(v) for v in range(g.n)) + tuple(
        f"{g.label(v)}*{j}" for v in range(g.n) for j in range(t))
    return Graph(n, edges, labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two sides."""
    n = g.n + h.n
    if n > VERTEX_CAP:
        raise GraphError(f"join order {n} exceeds cap {VERTEX_CAP}")
    edges = list(g.edges())
    edges.extend((g.n + u, g.n + v) for u, v in h.edges())
    edges.extend((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    edges = []
    for u in range(g.n):
        row = ~g.adj[u] & full & ~((1 << (u + 1)) - 1)
        edges.extend((u, v) for v in iter_bits(row))
    return Graph(g.n, edges, g.labels)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) not present")
    edges = [(a, b) for a, b in g.edges() if {a, b} != {u, v}]
    return Graph(g.n, edges, g.labels)


def spanning_tree(g: Graph, root: int = 0) -> Graph:
    """BFS spanning tree from ``root``, neighbors explored in ascending index order."""
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} out of range")
    if not is_connected(g):
        raise GraphError("spanning_tree requires a connected graph")
    seen = 1 << root
    queue = deque([root])
    edges = []
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj[u] & ~seen):
            seen |= 1 << v
            edges.append((u, v))
            queue.append(v)
    return Graph(g.n, edges, g.labels)


# ---------------------------------------------------------------------------
# Structural queries.
# ---------------------------------------------------------------------------

def min_degree(g: Graph) -> int:
    return min((g.degree(v) for v in range(g.n)), default=0)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def leaf_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    remaining = g.full_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def component_is_complete(g: Graph) -> bool:
    """Whether any connected component induces a complete graph (K_1 counts)."""
    for comp in components(g):
        if all(g.closed[v] & comp == comp for v in iter_bits(comp)):
            return True
    return False


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count == g.n - 1


def is_cycle_graph(g: Graph) -> bool:
    """Structural test for "is a cycle of order n": connected and 2-regular."""
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def has_hamiltonian_cycle(g: Graph, search_cap: int = HAMILTONIAN_SEARCH_CAP) -> bool:
    """Exhaustive backtracking Hamiltonian cycle test (small graphs only)."""
    n = g.n
    if n > search_cap:
        raise GraphError(f"hamiltonicity search refuses order {n} > cap {search_cap}")
    if n < 3:
        return False
    if not is_connected(g) or min_degree(g) < 2:
        return False
    full = g.full_mask
    adj = g.adj

    def extend(current: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[current] & 1)  # close the cycle back to vertex 0
        unvisited = full & ~visited
        # degree-based pruning: every unvisited vertex still needs two usable
        # slots among {unvisited vertices, current endpoint, start}
        for w in iter_bits(unvisited):
            if (adj[w] & (unvisited | (1 << current) | 1)).bit_count() < 2:
                return False
        for v in iter_bits(adj[current] & unvisited):
            if extend(v, visited | (1 << v)):
                return True
        return False

    return extend(0, 1)
