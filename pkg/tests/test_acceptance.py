"""Exit criteria. Each test is one numbered criterion; a summary line per
criterion is printed at the end of the run (see conftest.py)."""

import itertools
import random
import time

import pytest

from helpers import (
    brute_min_cut,
    classical_flow_betweenness,
    classical_flow_closeness,
    classical_strength,
    random_connected_spec,
    random_scalar_network,
)
from iwcentrality import io as iwio
from iwcentrality.centrality import iw_degree, iw_degree_tuned, iw_flow_betweenness, iw_flow_closeness, rank
from iwcentrality.graph import Bound, RawFlowRecord, aggregate_contemporary, aggregate_temporal, build_graph
from iwcentrality.interval import Interval, Relation, compare, hausdorff, inf_sup
from iwcentrality.maxflow import ScalarFlowNetwork, all_pairs_max_flow, max_flow
from iwcentrality.oracle import GridSpec, lexicographic_sweep, verify_endpoint_decomposition

pytestmark = pytest.mark.acceptance

I = Interval


def rounded(x):
    return (round(x.lower, 2), round(x.upper, 2))


@pytest.mark.criterion(1, "Table 2 reproduction")
def test_c1_degree_table(fig3):
    table = {
        0: {"v1": ((2, 2), 2), "v2": ((2, 2), 2), "v3": ((3, 3), 1), "v4": ((1, 1), 4)},
        0.5: {"v1": ((3.16, 3.74), 3), "v2": ((3.46, 4.47), 2), "v3": ((3.46, 4.90), 1), "v4": ((1.00, 1.73), 4)},
        1: {"v1": ((5, 7), 3), "v2": ((6, 10), 1), "v3": ((4, 8), 2), "v4": ((1, 3), 4)},
        1.5: {"v1": ((7.91, 13.10), 2), "v2": ((10.39, 22.36), 1), "v3": ((4.62, 13.06), 3), "v4": ((1.00, 5.20), 4)},
    }
    start = time.perf_counter()
    for alpha, expected in table.items():
        r = iw_degree_tuned(fig3, alpha)
        assert {v: (rounded(r.scores[v]), r.ranks[v]) for v in r.scores} == expected
    assert iw_degree(fig3).scores == iw_degree_tuned(fig3, 1).scores
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(2, "Table 3 reproduction")
def test_c2_flow_table(fig3):
    start = time.perf_counter()
    lo = all_pairs_max_flow(ScalarFlowNetwork.from_graph(fig3, Bound.LOWER))
    hi = all_pairs_max_flow(ScalarFlowNetwork.from_graph(fig3, Bound.UPPER))
    pairwise = [[(lo[a, b], hi[a, b]) for b in range(4)] for a in range(4)]
    assert pairwise == [
        [(0, 0), (5, 7), (3, 5), (1, 3)],
        [(5, 7), (0, 0), (3, 5), (1, 3)],
        [(3, 5), (3, 5), (0, 0), (1, 3)],
        [(1, 3), (1, 3), (1, 3), (0, 0)],
    ]

    fb = iw_flow_betweenness(fig3)
    assert fb.scores == {"v1": I(1, 1), "v2": I(2, 6), "v3": I(3, 7), "v4": I(0, 0)}
    assert fb.ranks == {"v1": 3, "v2": 2, "v3": 1, "v4": 4}
    assert fb.aux == {"v1": I(5, 11), "v2": I(5, 11), "v3": I(7, 13), "v4": I(11, 17)}
    assert rank(fb.aux) == {"v1": 3, "v2": 3, "v3": 2, "v4": 1}

    fc = iw_flow_closeness(fig3)
    assert fc.scores == {"v1": I(9, 15), "v2": I(9, 15), "v3": I(7, 13), "v4": I(3, 9)}
    assert fc.ranks == {"v1": 1, "v2": 1, "v3": 3, "v4": 4}
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(3, "Table 1 reproduction")
def test_c3_order_table():
    scenarios = [
        # X, Y, d_H, inf, sup, <m,rad> of X and Y
        ((1, 3), (4, 6), 3, (1, 3), (4, 6), (2, 1), (5, 1)),
        ((1, 4), (3, 6), 2, (1, 4), (3, 6), (2.5, 1.5), (4.5, 1.5)),
        ((2, 5), (1, 6), 1, (1, 5), (2, 6), (3.5, 1.5), (3.5, 2.5)),
    ]
    for x, y, dh, lo, hi, mx, my in scenarios:
        X, Y = I(*x), I(*y)
        assert compare(X, Y).relation is Relation.LESS
        assert compare(Y, X).relation is Relation.GREATER
        assert hausdorff(X, Y) == dh
        assert inf_sup(X, Y) == (I(*lo), I(*hi))
        assert (X.midpoint, X.radius) == mx and (Y.midpoint, Y.radius) == my
    assert compare(I(2, 5), I(1, 6)).tie_broken_by_radius
    assert not compare(I(1, 3), I(4, 6)).tie_broken_by_radius


@pytest.mark.criterion(4, "Lexicographic sweep on the triangle")
def test_c4_lexicographic_sweep():
    g = build_graph(["v1", "v2", "v3"], [("v1", "v2", (2, 8)), ("v1", "v3", (1, 5)), ("v2", "v3", (0, 10))])
    start = time.perf_counter()
    for s, t in itertools.permutations(g.vertices, 2):
        r = lexicographic_sweep(g, s, t, GridSpec(5))
        assert r.count == 125
        assert r.monotone
        assert r.min_combination == (2, 1, 0) and r.min_at_lower
        assert r.max_combination == (8, 5, 10) and r.max_at_upper
    assert time.perf_counter() - start < 5.0


@pytest.mark.criterion(5, "Oracle equivalence on random IWNs")
def test_c5_oracle_equivalence():
    rng = random.Random(20240501)
    start = time.perf_counter()
    checked = 0
    for _ in range(100):
        vs, edges = random_connected_spec(rng, 4, 6, extra_max=2, hi=10)
        assert all(0 <= lo <= up <= 10 for _, _, (lo, up) in edges)
        assert verify_endpoint_decomposition(build_graph(vs, edges), GridSpec(3))
        checked += 1
    assert checked >= 100
    assert time.perf_counter() - start < 120.0


@pytest.mark.criterion(6, "Max-flow equals min-cut")
def test_c6_max_flow_min_cut():
    rng = random.Random(6)
    start = time.perf_counter()
    for _ in range(200):
        vs, edges = random_scalar_network(rng, n_max=8)
        net = ScalarFlowNetwork(vs, edges)
        s, t = rng.sample(vs, 2)
        assert max_flow(net, s, t).value == brute_min_cut(vs, edges, s, t)
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion(7, "Degenerate graphs reduce to classical measures")
def test_c7_degenerate_consistency():
    rng = random.Random(7)
    for _ in range(50):
        vs, edges = random_connected_spec(rng, 3, 6, extra_max=3, degenerate=True)
        scalar = [(u, v, lo) for u, v, (lo, _) in edges]
        g = build_graph(vs, edges)
        assert g.is_degenerate()
        for measure, classical in (
            (iw_degree, classical_strength),
            (iw_flow_closeness, classical_flow_closeness),
            (iw_flow_betweenness, classical_flow_betweenness),
        ):
            expected = classical(vs, scalar)
            assert measure(g).scores == {v: I(expected[v], expected[v]) for v in vs}


@pytest.mark.criterion(8, "Aggregation pipeline properties")
def test_c8_aggregation(tmp_path):
    rng = random.Random(8)
    labels = [f"N{i:02d}" for i in range(23)]
    for size in (1, 10, 250, 1000):
        records = [
            RawFlowRecord(*rng.sample(labels, 2), rng.randint(0, 500), str(rng.randint(2003, 2015)))
            for _ in range(size)
        ]
        for threshold in (0, 50):
            g = aggregate_contemporary(records, threshold)
            # threshold semantics: strict, min/max of survivors
            survivors = {}
            for r in records:
                if r.weight > threshold:
                    survivors.setdefault(frozenset((r.source, r.target)), []).append(r.weight)
            assert {frozenset((u, v)): w for u, v, w in g.edges()} == {
                k: I(min(ws), max(ws)) for k, ws in survivors.items()
            }
            # direction symmetry and reorder invariance
            flipped = [RawFlowRecord(r.target, r.source, r.weight, r.period) for r in records]
            shuffled = rng.sample(records, len(records))
            assert aggregate_contemporary(flipped, threshold) == g
            assert aggregate_contemporary(shuffled, threshold) == g
            assert aggregate_temporal(shuffled, threshold) == g

            # round trip, byte-stable
            text = iwio.edge_list_csv(g)
            path = tmp_path / f"g{size}_{threshold}.csv"
            path.write_text(text)
            again = iwio.read_edge_list(path)
            assert {frozenset((u, v)): w for u, v, w in again.edges()} == {
                frozenset((u, v)): w for u, v, w in g.edges()
            }
            assert iwio.edge_list_csv(again) == text
            assert iwio.edge_list_csv(aggregate_contemporary(shuffled, threshold)) == text
