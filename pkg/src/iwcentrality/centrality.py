"""Degree, flow-betweenness and flow-closeness centrality with interval scores.

Flow measures are computed by endpoint decomposition: the scalar problem is
solved once on the network of all lower bounds and once on the network of
all upper bounds, and the two totals become the score interval. Max-flow is
non-decreasing in every edge capacity, so these are the extreme values over
all capacity choices inside the intervals.
"""

from __future__ import annotations

import enum
import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from iwcentrality.exceptions import NegativeAlpha
from iwcentrality.graph import Bound, IWGraph
from iwcentrality.interval import ZERO, Interval, Relation, compare, power, scale
from iwcentrality.maxflow import ScalarFlowNetwork, _edmonds_karp, all_pairs_max_flow


class Measure(enum.Enum):
    DEGREE = "degree"
    DEGREE_TUNED = "degree_tuned"
    FLOW_BETWEENNESS = "flow_betweenness"
    FLOW_CLOSENESS = "flow_closeness"


@dataclass(frozen=True)
class CentralityReport:
    measure: Measure
    scores: Dict[str, Interval]
    ranks: Dict[str, int]
    alpha: Optional[float] = None
    # Flow betweenness only: total max flow over pairs not involving the vertex.
    aux: Optional[Dict[str, Interval]] = None

    def ordered(self) -> List[str]:
        """Vertices by ascending rank, ties by label."""
        return sorted(self.scores, key=lambda v: (self.ranks[v], v))


def rank(scores: Mapping[str, Interval], eps: float = 0.0) -> Dict[str, int]:
    """Competition ranks ("1224"), rank 1 for the greatest interval.

    Equivalent intervals share a rank and the next distinct score skips
    by the size of the tie group.
    """
    cmp = lambda a, b: -compare(scores[a], scores[b], eps).sign  # noqa: E731
    order = sorted(sorted(scores), key=functools.cmp_to_key(cmp))
    ranks: Dict[str, int] = {}
    for pos, v in enumerate(order):
        prev = order[pos - 1] if pos else None
        if prev is not None and compare(scores[v], scores[prev], eps).relation is Relation.EQUIVALENT:
            ranks[v] = ranks[prev]
        else:
            ranks[v] = pos + 1
    return ranks


def _report(measure, scores, **kw) -> CentralityReport:
    return CentralityReport(measure, scores, rank(scores), **kw)


def strength(g: IWGraph) -> Dict[str, Interval]:
    out = {}
    for v in g.vertices:
        s = ZERO
        for w in g.neighbors(v).values():
            s = s + w
        out[v] = s
    return out


def iw_degree(g: IWGraph) -> CentralityReport:
    """Interval strength: sum of incident edge intervals."""
    return _report(Measure.DEGREE, strength(g))


def iw_degree_tuned(g: IWGraph, alpha: float) -> CentralityReport:
    """``k ** (1 - alpha) * s ** alpha`` with ``k`` the binary degree and ``s`` the interval strength.

    ``alpha = 0`` gives the binary degree, ``alpha = 1`` the interval
    strength; isolated vertices score ``[0, 0]``.
    """
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be non-negative, got {alpha}")
    scores = {}
    for v, s in strength(g).items():
        k = g.degree(v)
        scores[v] = ZERO if k == 0 else scale(power(s, alpha), k ** (1 - alpha))
    return _report(Measure.DEGREE_TUNED, scores, alpha=float(alpha))


def _projections(g: IWGraph):
    return ScalarFlowNetwork.from_graph(g, Bound.LOWER), ScalarFlowNetwork.from_graph(g, Bound.UPPER)


def iw_flow_closeness(g: IWGraph) -> CentralityReport:
    """Sum of max flows from each vertex to every other vertex, per bound."""
    lo, hi = (all_pairs_max_flow(net) for net in _projections(g))
    scores = {v: Interval(lo[i].sum(), hi[i].sum()) for i, v in enumerate(g.vertices)}
    return _report(Measure.FLOW_CLOSENESS, scores)


def _dependency_totals(net: ScalarFlowNetwork, pair_flows: np.ndarray, i: int) -> Tuple[float, float]:
    """(sum of f_jk(i), sum of max-flow(j, k)) over unordered pairs {j, k} avoiding i."""
    others = [v for v in range(len(net.vertices)) if v != i]
    blocked = frozenset((i,))
    dep = total = 0.0
    for j, k in itertools.combinations(others, 2):
        base = pair_flows[j, k]
        total += base
        if base > 0:
            dep += max(base - _edmonds_karp(net, j, k, blocked)[0], 0.0)
    return dep, total


def _dependency_job(args):
    net, pair_flows, i = args
    return _dependency_totals(net, pair_flows, i)


def iw_flow_betweenness(g: IWGraph, workers: int = 1) -> CentralityReport:
    """Flow betweenness: how much pairwise max flow vanishes without each vertex.

    Sums run over unordered pairs ``{j, k}`` not containing the vertex. The
    report's ``aux`` holds the total max flow over the same pairs, so
    ``score <= aux`` endpoint-wise. The score is the hull of the lower- and
    upper-network totals, which are in that order on most graphs but not
    all of them.

    Args:
        g: the network. Disconnected graphs are fine; unreachable pairs add 0.
        workers: process count for the per-vertex sweep. Results do not
            depend on it.
    """
    nets = _projections(g)
    flows = [all_pairs_max_flow(net) for net in nets]
    jobs = [(nets[b], flows[b], i) for b in range(2) for i in range(len(g))]
    if workers > 1 and len(g) > 2:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_dependency_job, jobs))
    else:
        results = [_dependency_job(job) for job in jobs]
    n = len(g)
    lower, upper = results[:n], results[n:]
    scores, aux = {}, {}
    for i, v in enumerate(g.vertices):
        # Dependency is a difference of two monotone flows and is not itself
        # monotone: the lower-bound total can exceed the upper-bound one.
        dl, du = lower[i][0], upper[i][0]
        scores[v] = Interval(min(dl, du), max(dl, du))
        aux[v] = Interval(lower[i][1], upper[i][1])
    return _report(Measure.FLOW_BETWEENNESS, scores, aux=aux)
