"""Exact invariant solvers: branch-and-bound searches over bitmask states.

Every solver returns a SolveResult whose witness re-verifies under the
protection verifiers (or the natural structural check for matching, packing
and coloring witnesses).  Search order is deterministic: candidate sets are
explored so that the reported witness is the lexicographically least optimum
(for guard functions: minimal support in set order, then minimal two-guard
set, at the smallest feasible support size).

Size limits are configuration (SolverLimits), not constants; exceeding one
raises LimitExceeded so audit drivers can mark results incomplete instead of
hanging.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .graph import Graph, VertexSet, complement, iter_bits
from .protection import GuardFunction, kdom_mask, secure_mask, wrdf_mask


class LimitExceeded(RuntimeError):
    """An input is larger than the configured limit for the requested solver."""

    def __init__(self, invariant: str, n: int, limit: int):
        super().__init__(f"{invariant}: order {n} exceeds solver limit {limit}")
        self.invariant = invariant
        self.n = n
        self.limit = limit


@dataclass(frozen=True)
class SolverLimits:
    """Per-solver order caps; defaults sized so the acceptance suite runs in minutes."""

    domination_max_n: int = 32
    weak_roman_max_n: int = 28
    secure_max_n: int = 28
    roman_max_n: int = 20
    kdomination_max_n: int = 18
    matching_max_n: int = 26
    two_packing_max_n: int = 26
    chromatic_max_n: int = 16
    gamma_sets_max_n: int = 18
    hamiltonian_max_n: int = 24

    def scaled(self, cap: int) -> "SolverLimits":
        """Clamp every limit to ``cap`` (used by the CLI --limit-n flag)."""
        return SolverLimits(**{k: min(v, cap) for k, v in self.__dict__.items()})


DEFAULT_LIMITS = SolverLimits()


@dataclass
class SolveResult:
    invariant_id: str
    value: int
    witness: object
    nodes_explored: int = 0

    def witness_json(self):
        w = self.witness
        if isinstance(w, VertexSet):
            return {"kind": "vertex_set", "text": w.to_text()}
        if isinstance(w, GuardFunction):
            return {"kind": "guard_function", "text": w.to_text()}
        if isinstance(w, tuple) and all(isinstance(x, VertexSet) for x in w):
            return {"kind": "vertex_set_list", "sets": [x.to_text() for x in w]}
        if isinstance(w, tuple):
            return {"kind": "edge_set", "edges": [list(e) for e in w]}
        return {"kind": "none"}

    def to_json_dict(self) -> dict:
        return {
            "invariant_id": self.invariant_id,
            "value": self.value,
            "witness": self.witness_json(),
            "nodes_explored": self.nodes_explored,
        }


def _check(limits: Optional[SolverLimits], invariant: str, n: int, limit_name: str) -> SolverLimits:
    limits = limits or DEFAULT_LIMITS
    cap = getattr(limits, limit_name)
    if n > cap:
        raise LimitExceeded(invariant, n, cap)
    return limits


# ---------------------------------------------------------------------------
# Dominating-set enumeration kernels.
# ---------------------------------------------------------------------------

def _max_cover(g: Graph) -> int:
    return max((c.bit_count() for c in g.closed), default=1)


def _greedy_dominating_mask(g: Graph) -> int:
    covered, chosen = 0, 0
    full, closed = g.full_mask, g.closed
    while covered != full:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            if chosen >> v & 1:
                continue
            gain = (closed[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_v = gain, v
        chosen |= 1 << best_v
        covered |= closed[best_v]
    return chosen


def _gamma_value(g: Graph, counter: list[int]) -> int:
    """Minimum dominating set size: branch on the lowest uncovered vertex's
    closed neighborhood, seeded with the greedy cover as incumbent."""
    if g.n == 0:
        return 0
    full, closed = g.full_mask, g.closed
    maxcov = _max_cover(g)
    best = _greedy_dominating_mask(g).bit_count()

    def rec(covered: int, size: int, avail: int) -> None:
        nonlocal best
        counter[0] += 1
        if covered == full:
            if size < best:
                best = size
            return
        unc = full & ~covered
        if size + -(-unc.bit_count() // maxcov) >= best:
            return
        u = (unc & -unc).bit_length() - 1
        opts = closed[u] & avail
        cur = avail
        for x in iter_bits(opts):
            bit = 1 << x
            cur &= ~bit
            rec(covered | closed[x], size + 1, cur)

    rec(0, 0, full)
    return best


def _all_dominating_masks(g: Graph, size: int, counter: list[int]) -> Iterator[int]:
    """Every dominating set of exactly ``size`` vertices, each yielded once.

    Duplicate-free by partitioning on the smallest chosen member of the lowest
    uncovered vertex's closed neighborhood; once everything is covered the
    remaining picks are free and filled by plain combinations.
    """
    if size < 0 or size > g.n:
        return
    full, closed = g.full_mask, g.closed
    maxcov = _max_cover(g)

    def rec(chosen: int, covered: int, avail: int, r: int) -> Iterator[int]:
        counter[0] += 1
        if covered == full:
            if r == 0:
                yield chosen
            else:
                pool = list(iter_bits(avail))
                if len(pool) >= r:
                    for extra in combinations(pool, r):
                        m = chosen
                        for b in extra:
                            m |= 1 << b
                        yield m
            return
        if r == 0:
            return
        unc = full & ~covered
        if unc.bit_count() > r * maxcov:
            return
        u = (unc & -unc).bit_length() - 1
        cur = avail
        for x in iter_bits(closed[u] & avail):
            bit = 1 << x
            cur &= ~bit
            yield from rec(chosen | bit, covered | closed[x], cur, r - 1)

    yield from rec(0, 0, full, size)


def _lex_dominating_masks(g: Graph, size: int, counter: list[int]) -> Iterator[int]:
    """Dominating sets of exactly ``size`` vertices in lexicographic order of
    their sorted member tuples (include-first depth-first scan)."""
    if size < 0 or size > g.n:
        return
    n, full, closed = g.n, g.full_mask, g.closed
    maxcov = _max_cover(g)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]

    def rec(chosen: int, covered: int, i: int, r: int) -> Iterator[int]:
        counter[0] += 1
        if r == 0:
            if covered == full:
                yield chosen
            return
        if n - i < r:
            return
        unc = full & ~covered
        if unc & ~suffix[i]:
            return
        if unc.bit_count() > r * maxcov:
            return
        if not unc:
            for extra in combinations(range(i, n), r):
                m = chosen
                for b in extra:
                    m |= 1 << b
                yield m
            return
        yield from rec(chosen | (1 << i), covered | closed[i], i + 1, r - 1)
        yield from rec(chosen, covered, i + 1, r)

    yield from rec(0, 0, 0, size)


# ---------------------------------------------------------------------------
# Domination-family solvers.
# ---------------------------------------------------------------------------

def gamma(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Domination number with the lexicographically least minimum dominating set."""
    _check(limits, "gamma", g.n, "domination_max_n")
    counter = [0]
    value = _gamma_value(g, counter)
    witness = next(_lex_dominating_masks(g, value, counter), 0)
    return SolveResult("gamma", value, VertexSet(witness, g.n), counter[0])


def gamma_k(g: Graph, k: int, limits: Optional[SolverLimits] = None) -> SolveResult:
    """k-domination number by cardinality-ordered subset scan."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _check(limits, f"gamma_{k}", g.n, "kdomination_max_n")
    counter = [0]
    forced = 0
    for v in range(g.n):
        if g.degree(v) < k:
            forced |= 1 << v
    for size in range(forced.bit_count(), g.n + 1):
        for combo in combinations(range(g.n), size):
            counter[0] += 1
            mask = 0
            for b in combo:
                mask |= 1 << b
            if forced & ~mask:
                continue
            if kdom_mask(g, mask, k):
                return SolveResult(f"gamma_{k}", size, VertexSet(mask, g.n), counter[0])
    raise AssertionError("the whole vertex set is always k-dominating")


def gamma_secure(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Secure domination number: dominating sets in cardinality order, secure check."""
    _check(limits, "gamma_secure", g.n, "secure_max_n")
    counter = [0]
    start = _gamma_value(g, counter)
    for size in range(start, g.n + 1):
        if any(secure_mask(g, m) for m in _all_dominating_masks(g, size, counter)):
            for m in _lex_dominating_masks(g, size, counter):
                counter[0] += 1
                if secure_mask(g, m):
                    return SolveResult("gamma_secure", size, VertexSet(m, g.n), counter[0])
    raise AssertionError("the whole vertex set is always a secure dominating set")


def gamma_weak_roman(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Weak Roman domination number.

    Candidate weights run from gamma(g) to 2*gamma(g) (the proven window); for
    each weight, supports are dominating sets and the two-guard subset ranges
    over the support.  The first feasible weight wins; its witness is recovered
    in canonical order (support size ascending, support lex, two-set lex).
    """
    _check(limits, "gamma_weak_roman", g.n, "weak_roman_max_n")
    counter = [0]
    gval = _gamma_value(g, counter)
    for weight in range(gval, 2 * gval + 1):
        if _exists_wrdf_of_weight(g, weight, gval, counter):
            witness = _lex_wrdf_of_weight(g, weight, gval, counter)
            assert witness is not None
            return SolveResult("gamma_weak_roman", weight, witness, counter[0])
    raise AssertionError("a weak Roman function of weight 2*gamma always exists")


def _support_range(weight: int, gval: int) -> range:
    return range(max((weight + 1) // 2, gval), weight + 1)


def _exists_wrdf_of_weight(g: Graph, weight: int, gval: int, counter: list[int]) -> bool:
    for s in _support_range(weight, gval):
        doubles = weight - s
        for smask in _all_dominating_masks(g, s, counter):
            members = list(iter_bits(smask))
            for dcombo in combinations(members, doubles):
                counter[0] += 1
                twos = 0
                for b in dcombo:
                    twos |= 1 << b
                if wrdf_mask(g, smask, twos):
                    return True
    return False


def _lex_wrdf_of_weight(g: Graph, weight: int, gval: int,
                        counter: list[int]) -> Optional[GuardFunction]:
    for s in _support_range(weight, gval):
        doubles = weight - s
        for smask in _lex_dominating_masks(g, s, counter):
            members = list(iter_bits(smask))
            for dcombo in combinations(members, doubles):
                counter[0] += 1
                twos = 0
                for b in dcombo:
                    twos |= 1 << b
                if wrdf_mask(g, smask, twos):
                    return GuardFunction.from_masks(g, smask, twos)
    return None


def weak_roman_function_with_reserve(g: Graph, limits: Optional[SolverLimits] = None
                                     ) -> Optional[GuardFunction]:
    """A minimum-weight weak Roman function holding two guards somewhere, or
    None when every optimal function is guard-count {0,1} only."""
    base = gamma_weak_roman(g, limits)
    counter = [0]
    gval = _gamma_value(g, counter)
    for s in _support_range(base.value, gval):
        doubles = base.value - s
        if doubles == 0:
            continue
        for smask in _lex_dominating_masks(g, s, counter):
            members = list(iter_bits(smask))
            for dcombo in combinations(members, doubles):
                twos = 0
                for b in dcombo:
                    twos |= 1 << b
                if wrdf_mask(g, smask, twos):
                    return GuardFunction.from_masks(g, smask, twos)
    return None


def gamma_roman(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Roman domination number: scan two-guard sets; uncovered vertices are
    forced into the one-guard class, so weight is 2|D| + |V \\ N[D]|."""
    _check(limits, "gamma_roman", g.n, "roman_max_n")
    counter = [0]
    n, full, closed = g.n, g.full_mask, g.closed
    best: Optional[int] = None
    best_masks: tuple[int, int] = (0, 0)
    for d in range(n + 1):
        if best is not None and 2 * d >= best:
            break
        for combo in combinations(range(n), d):
            counter[0] += 1
            dmask = 0
            reach = 0
            for b in combo:
                dmask |= 1 << b
                reach |= closed[b]
            ones = full & ~reach
            w = 2 * d + ones.bit_count()
            if best is None or w < best:
                best = w
                best_masks = (dmask | ones, dmask)
    assert best is not None
    witness = GuardFunction.from_masks(g, *best_masks)
    return SolveResult("gamma_roman", best, witness, counter[0])


# ---------------------------------------------------------------------------
# Auxiliary invariants.
# ---------------------------------------------------------------------------

def matching_number(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Maximum matching size by include/skip branching on the lowest uncovered vertex."""
    _check(limits, "matching", g.n, "matching_max_n")
    counter = [0]
    full, adj = g.full_mask, g.adj
    best = -1
    best_edges: tuple[tuple[int, int], ...] = ()
    stack: list[tuple[int, int]] = []

    def rec(covered: int, size: int) -> None:
        nonlocal best, best_edges
        counter[0] += 1
        unc = full & ~covered
        if size + unc.bit_count() // 2 <= best:
            return
        v = -1
        for b in iter_bits(unc):
            if adj[b] & unc & ~(1 << b):
                v = b
                break
        if v < 0:
            if size > best:
                best = size
                best_edges = tuple(stack)
            return
        for u in iter_bits(adj[v] & unc):
            stack.append((v, u))
            rec(covered | 1 << v | 1 << u, size + 1)
            stack.pop()
        rec(covered | 1 << v, size)

    rec(0, 0)
    return SolveResult("matching", best, best_edges, counter[0])


def two_packing(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """2-packing number as a maximum independent set of the closed-neighborhood
    intersection graph."""
    _check(limits, "two_packing", g.n, "two_packing_max_n")
    counter = [0]
    n, closed = g.n, g.closed
    conflict = [0] * n  # conflict[v] includes v itself
    for v in range(n):
        row = 1 << v
        for u in range(n):
            if u != v and closed[u] & closed[v]:
                row |= 1 << u
        conflict[v] = row
    best = 0
    full = g.full_mask

    def rec(cand: int, size: int) -> None:
        nonlocal best
        counter[0] += 1
        if size + cand.bit_count() <= best:
            return
        if not cand:
            if size > best:
                best = size
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~conflict[v], size + 1)
        rec(cand & ~low, size)

    rec(full, 0)

    def lex_witness(chosen: int, banned: int, i: int, r: int) -> Optional[int]:
        counter[0] += 1
        if r == 0:
            return chosen
        if n - i < r:
            return None
        if not banned >> i & 1:
            res = lex_witness(chosen | 1 << i, banned | conflict[i], i + 1, r - 1)
            if res is not None:
                return res
        return lex_witness(chosen, banned, i + 1, r)

    witness = lex_witness(0, 0, 0, best) if best else 0
    return SolveResult("two_packing", best, VertexSet(witness or 0, n), counter[0])


def _chromatic_core(g: Graph, counter: list[int]) -> tuple[int, tuple[int, ...]]:
    """Branch-and-bound coloring; returns (chromatic number, per-vertex colors)."""
    n, adj = g.n, g.adj
    if n == 0:
        return 0, ()
    clique = [0]
    for v in range(1, n):
        if all(adj[v] >> u & 1 for u in clique):
            clique.append(v)
    colors = [-1] * n
    for idx, v in enumerate(clique):
        colors[v] = idx
    rest = [v for v in range(n) if colors[v] < 0]

    # greedy incumbent: lowest feasible color, vertices ascending
    greedy = list(colors)
    for v in rest:
        used = {greedy[u] for u in iter_bits(adj[v]) if greedy[u] >= 0}
        c = 0
        while c in used:
            c += 1
        greedy[v] = c
    best = max(greedy) + 1
    best_colors = tuple(greedy)
    base = len(clique)

    def dfs(idx: int, used: int) -> None:
        nonlocal best, best_colors
        counter[0] += 1
        if used >= best:
            return
        if idx == len(rest):
            best = used
            best_colors = tuple(colors)
            return
        v = rest[idx]
        neighbor_colors = {colors[u] for u in iter_bits(adj[v]) if colors[u] >= 0}
        for c in range(used):
            if c not in neighbor_colors:
                colors[v] = c
                dfs(idx + 1, used)
        if used + 1 < best:
            colors[v] = used
            dfs(idx + 1, used + 1)
        colors[v] = -1

    dfs(0, base)
    return best, best_colors


def _color_classes(g: Graph, value: int, coloring: Sequence[int]) -> tuple[VertexSet, ...]:
    classes = [0] * value
    for v, c in enumerate(coloring):
        classes[c] |= 1 << v
    classes = [m for m in classes if m]
    classes.sort(key=lambda m: (m & -m).bit_length())
    return tuple(VertexSet(m, g.n) for m in classes)


def chromatic_number(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    _check(limits, "chromatic", g.n, "chromatic_max_n")
    counter = [0]
    value, coloring = _chromatic_core(g, counter)
    return SolveResult("chromatic", value, _color_classes(g, value, coloring), counter[0])


def clique_cover(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Clique covering number as the chromatic number of the complement; the
    witness is the partition of the vertices into cliques."""
    _check(limits, "clique_cover", g.n, "chromatic_max_n")
    counter = [0]
    value, coloring = _chromatic_core(complement(g), counter)
    return SolveResult("clique_cover", value, _color_classes(g, value, coloring), counter[0])


# ---------------------------------------------------------------------------
# Gamma-set enumeration and the twin-based tau invariant.
# ---------------------------------------------------------------------------

def enumerate_gamma_sets(g: Graph, limits: Optional[SolverLimits] = None) -> list[VertexSet]:
    """All minimum dominating sets, in ascending (lexicographic) order."""
    _check(limits, "gamma_sets", g.n, "gamma_sets_max_n")
    counter = [0]
    value = _gamma_value(g, counter)
    return [VertexSet(m, g.n) for m in _lex_dominating_masks(g, value, counter)]


def twin_classes(g: Graph) -> list[int]:
    """Equivalence classes of true twins (equal closed neighborhoods) as masks."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.closed[v]] = groups.get(g.closed[v], 0) | 1 << v
    return list(groups.values())


def twin_shadow_mask(g: Graph, s_mask: int) -> int:
    """Vertices outside the set having a true twin inside it."""
    shadow = 0
    for cls in twin_classes(g):
        if cls & s_mask:
            shadow |= cls & ~s_mask
    return shadow


def tau(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Largest twin shadow over all minimum dominating sets; the witness is the
    maximizing set (lexicographically least on ties)."""
    _check(limits, "tau", g.n, "gamma_sets_max_n")
    counter = [0]
    value = _gamma_value(g, counter)
    best = -1
    best_mask = 0
    for m in _lex_dominating_masks(g, value, counter):
        size = twin_shadow_mask(g, m).bit_count()
        if size > best:
            best = size
            best_mask = m
    if best < 0:
        best = 0
    return SolveResult("tau", best, VertexSet(best_mask, g.n), counter[0])


# ---------------------------------------------------------------------------
# Dispatch table used by the CLI and the audit layer.
# ---------------------------------------------------------------------------

def solve(g: Graph, invariant: str, limits: Optional[SolverLimits] = None) -> SolveResult:
    if invariant == "gamma":
        return gamma(g, limits)
    if invariant.startswith("gamma_") and invariant[6:].isdigit():
        return gamma_k(g, int(invariant[6:]), limits)
    table = {
        "gamma_roman": gamma_roman,
        "gamma_weak_roman": gamma_weak_roman,
        "gamma_secure": gamma_secure,
        "matching": matching_number,
        "two_packing": two_packing,
        "chromatic": chromatic_number,
        "clique_cover": clique_cover,
        "tau": tau,
    }
    if invariant not in table:
        raise ValueError(f"unknown invariant {invariant!r}")
    return table[invariant](g, limits)


INVARIANT_IDS = ("gamma", "gamma_2", "gamma_roman", "gamma_weak_roman", "gamma_secure",
                 "matching", "two_packing", "chromatic", "clique_cover", "tau")
