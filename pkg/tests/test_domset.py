"""Dominating set branch solver.

Covers the greedy dominating set, part classification, the branch
statistics with their guaranteed ceilings, thread determinism, and
agreement with the brute-force oracle on a random corpus.
"""

import pytest

from dimsolver import (
    Coloring,
    DotTracer,
    brute_solve,
    classify_part,
    find_dominating_set,
    preprocess,
    solve_domset,
    validate_dim,
)
from support import (
    C4_UNIT,
    C6_UNIT,
    K3_123,
    P4_527,
    STAR_419,
    complete,
    graph,
    random_corpus,
    star,
)


def is_dominating(g, d):
    covered = set(d)
    for v in d:
        covered.update(u for u, _ in g.adjacency[v])
    return len(covered) == g.n


def test_find_dominating_set_is_dominating():
    for g in random_corpus(150, seed=3):
        d = find_dominating_set(g)
        assert d == sorted(set(d))
        assert is_dominating(g, d)


def test_find_dominating_set_star_prefers_center():
    g = star([1.0] * 9)
    assert find_dominating_set(g) == [0]


def classify(g, blacks, single):
    col = Coloring(g)
    for v in blacks:
        assert col.set_black(v)
    res = col.propagate()
    assert res.stable
    parts = col.uncolored_partition()
    singles = sorted(parts)
    part_of = {v: s for s, vs in parts.items() for v in vs}
    part_index = {s: i for i, s in enumerate(singles)}
    return classify_part(col, single, parts[single], part_of, part_index)


def test_classify_empty_part_is_dead():
    #  P3 with both ends black: middle whitens, both singles own nothing
    g = graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
    info = classify(g, [0, 2], 0)
    assert info.kind == "dead" and info.members == ()


def test_classify_star_part_forces_center():
    #  single 0 sees leaves 1..3; the part {1,2,3} plus edges 1-2, 1-3
    #  has the unique star center 1
    g = graph(
        4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (1, 3, 1.0)]
    )
    info = classify(g, [0], 0)
    assert info.kind == "forced" and info.candidates == (1,)


def test_classify_single_edge_part_offers_both_endpoints():
    g = graph(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0)])
    info = classify(g, [0], 0)
    assert info.kind == "free" and info.candidates == (1, 2)


def test_classify_independent_part_offers_everyone():
    info = classify(STAR_419, [0], 0)
    assert info.kind == "free" and info.candidates == (1, 2, 3)


def test_classify_triangle_part_is_dead():
    g = graph(
        4,
        [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0),
         (1, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)],
    )
    info = classify(g, [0], 0)
    assert info.kind == "dead"


def test_classify_cross_edge_reported():
    #  two singles 0 and 5 with parts {1,2} and {3,4}; cross edge 2-3
    g = graph(
        6,
        [(0, 1, 1.0), (0, 2, 1.0), (5, 3, 1.0), (5, 4, 1.0), (2, 3, 1.0)],
    )
    info = classify(g, [0, 5], 0)
    assert info.kind == "cross"
    assert info.cross == (0, 1, 2, 3)
    assert info.candidates == (1, 2)


def test_solve_goldens():
    out = solve_domset(P4_527)
    assert out.dim.weight == 2.0 and out.dim.edge_ids == frozenset({1})
    assert solve_domset(K3_123).dim.weight == 1.0
    assert solve_domset(C4_UNIT).dim is None
    out = solve_domset(STAR_419)
    assert out.dim.weight == 1.0 and out.dim.edge_ids == frozenset({1})


def test_c6_stats_with_forced_dominating_set():
    out = solve_domset(C6_UNIT, dominating_set=[0, 3])
    assert out.dim.weight == 2.0
    st = out.stats
    assert st.dominating_set_size == 2
    assert st.roots_explored == 4
    assert st.branch_leaves_per_root == (1, 1, 1, 2)
    assert st.residual_singles_per_root == (0, 0, 0, 2)


def test_stats_respect_ceilings():
    for g in random_corpus(120, seed=17):
        out = solve_domset(g)
        st = out.stats
        d = st.dominating_set_size
        assert st.roots_explored <= 2 ** d
        cap = min(d, (g.n + 2) // 3)
        for leaves, q in zip(
            st.branch_leaves_per_root, st.residual_singles_per_root
        ):
            assert q <= cap
            assert leaves <= 2 ** q


def test_oracle_agreement():
    for g in random_corpus(150, seed=29):
        res = preprocess(g).residual
        want = brute_solve(res)
        out = solve_domset(res)
        if want.total == 0:
            assert out.dim is None
        else:
            assert out.dim is not None
            assert out.dim.weight == want.min_weight
            assert validate_dim(res, out.dim.edge_ids)


def test_thread_results_and_stats_are_identical():
    for g in random_corpus(24, seed=41, n_lo=5, n_hi=9):
        a = solve_domset(g, threads=1)
        b = solve_domset(g, threads=3)
        assert (a.dim is None) == (b.dim is None)
        if a.dim is not None:
            assert a.dim.edge_ids == b.dim.edge_ids
        assert a.stats == b.stats


def test_rejects_non_dominating_set():
    with pytest.raises(ValueError):
        solve_domset(P4_527, dominating_set=[0])


def test_rejects_bad_threads_and_traced_parallelism():
    with pytest.raises(ValueError):
        solve_domset(P4_527, threads=0)
    with pytest.raises(ValueError):
        solve_domset(P4_527, threads=2, tracer=DotTracer())


def test_observer_sees_each_stable_root():
    seen = []
    out = solve_domset(
        C6_UNIT,
        dominating_set=[0, 3],
        observer=lambda root, blacks, singles: seen.append((root, blacks, singles)),
    )
    assert out.dim is not None
    roots = [r for r, _, _ in seen]
    assert roots == sorted(roots) and len(set(roots)) == len(roots)
    for root, blacks, singles in seen:
        expect = frozenset(v for k, v in enumerate([0, 3]) if (root >> k) & 1)
        assert blacks == expect


def test_tracer_records_branches():
    tracer = DotTracer()
    out = solve_domset(C6_UNIT, dominating_set=[0, 3], tracer=tracer)
    assert out.dim is not None
    dot = tracer.to_dot()
    assert dot.startswith("digraph")
    assert "root 3" in dot
    assert dot.count("->") >= 4


def test_complete_graphs():
    # K3: each edge alone is a DIM; K4 and up: none (a lone edge leaves the
    # opposite edge undominated, two disjoint edges hit a crossing edge twice)
    out = solve_domset(complete(3, weight=2.0))
    assert out.dim is not None and out.dim.weight == 2.0
    assert solve_domset(complete(4)).dim is None
    assert solve_domset(complete(5)).dim is None


def test_isolated_vertices_are_fine_without_preprocess():
    g = graph(5, [(1, 2, 4.0), (2, 3, 1.0)])
    out = solve_domset(g)
    assert out.dim is not None and out.dim.weight == 1.0
