"""Integrity checks for the bundled graph6 corpora and the documented
lexicographic witness tie-break of the set-valued solvers."""

from itertools import combinations

from domguard.graph import is_connected, is_cycle_graph
from domguard.graph6 import write_graph6
from domguard.oracles import naive_is_df, naive_is_kdom, naive_is_secure
from domguard.solvers import gamma, gamma_k, gamma_secure

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_all_n6_corpus_counts(corpus_all_n6):
    by_n = {}
    for g in corpus_all_n6:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == ALL_COUNTS
    lines = [write_graph6(g) for g in corpus_all_n6]
    assert len(set(lines)) == len(lines)


def test_connected_n7_corpus_counts(corpus_connected_n7):
    by_n = {}
    for g in corpus_connected_n7:
        assert is_connected(g)
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == CONNECTED_COUNTS
    lines = [write_graph6(g) for g in corpus_connected_n7]
    assert len(set(lines)) == len(lines)


def test_each_order_has_exactly_one_cycle(corpus_connected_n7):
    # the connected 2-regular graph of each order is the cycle; exactly one
    # isomorphism-class representative per order must be present
    for n in range(3, 8):
        cycles = [g for g in corpus_connected_n7 if g.n == n and is_cycle_graph(g)]
        assert len(cycles) == 1


def test_corpus_graphs_are_simple(corpus_connected_n7):
    for g in corpus_connected_n7:
        for v in range(g.n):
            assert not g.has_edge(v, v)
            for u in g.neighbors(v):
                assert g.has_edge(u, v)


def _first_subset(n, size, predicate):
    for combo in combinations(range(n), size):
        if predicate(set(combo)):
            return combo
    return None


def test_witnesses_are_lexicographically_least(corpus_all_n6):
    """The documented tie-break: first optimum in sorted-tuple order."""
    for g in corpus_all_n6:
        res = gamma(g)
        assert res.witness.members() == _first_subset(
            g.n, res.value, lambda s: naive_is_df(g, s))
        res = gamma_secure(g)
        assert res.witness.members() == _first_subset(
            g.n, res.value, lambda s: naive_is_secure(g, s))
        res = gamma_k(g, 2)
        assert res.witness.members() == _first_subset(
            g.n, res.value, lambda s: naive_is_kdom(g, s, 2))


def test_gamma_set_enumeration_is_sorted(corpus_all_n6):
    from domguard.solvers import enumerate_gamma_sets
    for g in corpus_all_n6:
        sets = [s.members() for s in enumerate_gamma_sets(g)]
        assert sets == sorted(sets)
        assert len(set(sets)) == len(sets)


def test_guard_function_witness_canonical_order(corpus_all_n6):
    """Weak Roman witnesses follow the documented canonical order: smallest
    support size first, then support set lex, then two-guard subset lex."""
    from domguard.oracles import naive_is_df as df, naive_is_wrdf
    from domguard.solvers import gamma_weak_roman

    def reference_witness(g, weight, gamma_value):
        for s in range(max((weight + 1) // 2, gamma_value), weight + 1):
            for support in combinations(range(g.n), s):
                if not df(g, set(support)):
                    continue
                for twos in combinations(support, weight - s):
                    vals = [0] * g.n
                    for v in support:
                        vals[v] = 1
                    for v in twos:
                        vals[v] = 2
                    if naive_is_wrdf(g, vals):
                        return tuple(vals)
        return None

    for g in corpus_all_n6:
        if g.n > 5:
            continue  # reference scan is quadratic-ish in subsets; n<=5 suffices
        res = gamma_weak_roman(g)
        want = reference_witness(g, res.value, gamma(g).value)
        assert res.witness.values == want, (write_graph6(g), res.witness.values, want)
